#include "rcc/combinatorics.hpp"

namespace rcc {

Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

Integer factorial(long n) {
    if (n < 0) return 0;
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

std::vector<std::vector<long>> positive_compositions(long d, long k) {
    std::vector<std::vector<long>> out;
    if (k <= 0 || d < k) return out;
    std::vector<long> cur(static_cast<size_t>(k));
    // Recursive peel: first part runs 1..d-(k-1), remainder composed into k-1.
    auto rec = [&](auto&& self, long rest, long parts, size_t pos) -> void {
        if (parts == 1) {
            cur[pos] = rest;
            out.push_back(cur);
            return;
        }
        for (long first = 1; first <= rest - (parts - 1); ++first) {
            cur[pos] = first;
            self(self, rest - first, parts - 1, pos + 1);
        }
    };
    rec(rec, d, k, 0);
    return out;
}

long dimension_gate(long n, long d, const std::vector<Insertion>& insertions) {
    long m = static_cast<long>(insertions.size());
    long dim = d * (n + 1) + n - 3 + m;
    for (const auto& ins : insertions) dim -= ins.psi + ins.codim;
    return dim;
}

}  // namespace rcc
