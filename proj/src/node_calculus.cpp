#include "rcc/node_calculus.hpp"

#include <sstream>
#include <stdexcept>

namespace rcc {

std::vector<std::vector<long>> diagonal_weights(long n, long k, long l) {
    std::vector<std::vector<long>> out;
    if (n < 0 || k < 1 || l < 0) return out;
    const long target = n * (k - 1) + l;
    std::vector<long> cur(static_cast<size_t>(k));
    auto rec = [&](auto&& self, long pos, long left) -> void {
        if (pos == k - 1) {
            if (left >= 0 && left <= n) {
                cur[static_cast<size_t>(pos)] = left;
                out.push_back(cur);
            }
            return;
        }
        for (long c = std::max(0L, left - n * (k - 1 - pos)); c <= std::min(n, left); ++c) {
            cur[static_cast<size_t>(pos)] = c;
            self(self, pos + 1, left - c);
        }
    };
    rec(rec, 0, target);
    return out;
}

std::map<std::vector<long>, Integer> symmetric_expand(const std::vector<long>& eta_gens,
                                                      long k) {
    std::map<std::vector<long>, Integer> acc;
    if (k < 1) return acc;
    acc[std::vector<long>(static_cast<size_t>(k), 0)] = 1;
    for (long l : eta_gens) {
        if (l < 0) throw std::invalid_argument("symmetric_expand: negative degree");
        // monomials of h_l: all weak compositions of l into k parts, coeff 1
        std::vector<std::vector<long>> monos;
        std::vector<long> cur(static_cast<size_t>(k));
        auto rec = [&](auto&& self, long pos, long left) -> void {
            if (pos == k - 1) {
                cur[static_cast<size_t>(pos)] = left;
                monos.push_back(cur);
                return;
            }
            for (long e = 0; e <= left; ++e) {
                cur[static_cast<size_t>(pos)] = e;
                self(self, pos + 1, left - e);
            }
        };
        rec(rec, 0, l);

        std::map<std::vector<long>, Integer> next;
        for (const auto& [exp, coef] : acc)
            for (const auto& mono : monos) {
                std::vector<long> sum(static_cast<size_t>(k));
                for (size_t i = 0; i < sum.size(); ++i) sum[i] = exp[i] + mono[i];
                next[sum] += coef;
            }
        acc = std::move(next);
    }
    return acc;
}

Rational NodeCalculus::modified_descendant(long n, long d, long j, long b, long c,
                                           const ConstraintTuple& mu) {
    if (b < 0 || j < 0) throw std::invalid_argument("modified_descendant: bad powers");
    if (c > n || c < 0) return 0;
    if (b == 0) return eng_.descendant(n, d, j, c, mu.codims());

    std::ostringstream key;
    key << "M:" << n << ":" << d << ":" << j << ":" << b << ":" << c << ":"
        << mu.to_string();
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find(key.str());
        if (it != memo_.end()) return it->second;
    }

    Rational acc = modified_descendant(n, d, j + 1, b - 1, c, mu);
    for (const auto& ch : choose_sub_multisets(mu, j + 1)) {
        const long merged = c + ch.codim_sum;
        if (merged > n) continue;  // merged incidence class vanishes
        acc -= Rational(ch.multiplicity) *
               modified_descendant(n, d, 0, b - 1, merged, ch.rest);
    }

    std::lock_guard<std::mutex> lock(mutex_);
    memo_.emplace(key.str(), acc);
    return acc;
}

Rational NodeCalculus::vbar_number(const MulticomponentSpace& space,
                                   const NodeClass& cls) {
    const long n = space.n, k = space.k;
    if (n < 1 || k < 1 || space.d < 1)
        throw std::invalid_argument("vbar_number: need n >= 1, k >= 1, d >= 1");
    if (space.mu.empty_cycle()) return 0;
    const long l_total = cls.a_power + space.merged_node_codim;
    if (l_total > n) return 0;  // a0^l with l > n vanishes

    const auto splits = positive_compositions(space.d, k);
    if (splits.empty()) return 0;
    const auto dists = space.separated
                           ? constraint_distributions_separated(
                                 space.mu, k, space.separated->first,
                                 space.separated->second)
                           : constraint_distributions(space.mu, k);
    const auto diag = diagonal_weights(n, k, l_total);
    const auto sym = symmetric_expand(cls.eta_gens, k);

    Rational total = 0;
    for (const auto& degs : splits) {
        for (const auto& dist : dists) {
            for (const auto& w : diag) {
                for (const auto& [exps, coef] : sym) {
                    Rational prod = 1;
                    for (long i = 0; i < k && !prod.is_zero(); ++i) {
                        const size_t ui = static_cast<size_t>(i);
                        prod *= cls.modified
                                    ? modified_descendant(n, degs[ui], 0, exps[ui],
                                                          w[ui], dist.parts[ui])
                                    : eng_.descendant(n, degs[ui], exps[ui], w[ui],
                                                      dist.parts[ui].codims());
                    }
                    if (!prod.is_zero())
                        total += Rational(coef) * Rational(dist.multiplicity) * prod;
                }
            }
        }
    }
    return total / Rational(factorial(k));
}

NodeCalculus::PlanarAggregates NodeCalculus::planar_aggregates(long d) {
    if (d < 1) throw std::invalid_argument("planar_aggregates: need d >= 1");
    PlanarAggregates out;
    out.A = eng_.nd_plane(d);

    // two-component splittings weighted by how the 3d-2 points and the node
    // distribute; closed forms in the plane counts
    Rational sumB = 0, sumD = 0;
    for (long d1 = 1; d1 < d; ++d1) {
        const long d2 = d - d1;
        Rational nn = eng_.nd_plane(d1) * eng_.nd_plane(d2);
        Rational choose(binomial(3 * d - 2, 3 * d1 - 1));
        sumB += choose * Rational(d1 * d1 * d2 * d2) * nn;
        sumD += choose * Rational(d1 * d2) * nn;
    }
    out.B = Rational(-1) * out.A / Rational(d) + sumB / Rational(2 * d);
    out.Delta = sumD / Rational(2);
    out.C = Rational(-1) * out.Delta;
    return out;
}

}  // namespace rcc
