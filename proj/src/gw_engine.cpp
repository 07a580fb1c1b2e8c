#include "rcc/gw_engine.hpp"

#include "rcc/constraints.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace rcc {

namespace {

long codim_sum(const std::vector<long>& cs) {
    long s = 0;
    for (long c : cs) s += c;
    return s;
}

std::vector<Insertion> as_insertions(const InvariantKey& key) {
    std::vector<Insertion> ins;
    if (key.has_psi) ins.push_back({key.psi_j, key.psi_c});
    for (long c : key.codims) ins.push_back({0, c});
    return ins;
}

}  // namespace

Rational GWEngine::primary(long n, long d, const std::vector<long>& codims) {
    if (n < 1 || d < 0) throw std::invalid_argument("primary: need n >= 1, d >= 0");
    return eval(InvariantKey::primary(n, d, codims));
}

Rational GWEngine::descendant(long n, long d, long j, long c,
                              const std::vector<long>& codims) {
    if (n < 1 || d < 0 || j < 0)
        throw std::invalid_argument("descendant: need n >= 1, d >= 0, j >= 0");
    return desc_eval(n, d, j, c, codims);
}

Rational GWEngine::desc_eval(long n, long d, long j, long c, std::vector<long> codims) {
    if (j == 0) {  // tau_0(H^c) is just one more incidence insertion
        codims.push_back(c);
        return eval(InvariantKey::primary(n, d, std::move(codims)));
    }
    return eval(InvariantKey::descendant(n, d, j, c, std::move(codims)));
}

Rational GWEngine::nd_plane(long d) {
    if (d < 1) throw std::invalid_argument("nd_plane: need d >= 1");
    return primary(2, d, std::vector<long>(static_cast<size_t>(3 * d - 1), 2));
}

GWEngine::Stats GWEngine::stats() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return {hits_, misses_, memo_.size()};
}

void GWEngine::preload(const std::string& key, const Rational& value) {
    std::lock_guard<std::mutex> lock(mutex_);
    memo_.emplace(key, value);
}

std::vector<std::pair<std::string, Rational>> GWEngine::snapshot() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return {memo_.begin(), memo_.end()};
}

Rational GWEngine::eval(const InvariantKey& key) {
    const std::string ks = key.to_string();
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find(ks);
        if (it != memo_.end()) {
            ++hits_;
            return it->second;
        }
        ++misses_;
    }
    Rational v = compute(key);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        memo_.emplace(ks, v);
    }
    return v;
}

Rational GWEngine::compute(const InvariantKey& key) {
    return key.has_psi ? compute_descendant(key) : compute_primary(key);
}

std::pair<std::size_t, std::size_t> GWEngine::pick_companions(const InvariantKey& key,
                                                              std::size_t lo) const {
    const std::size_t size = key.codims.size();
    if (seed_ == 0 || size - lo == 2) return {size - 2, size - 1};
    std::seed_seq sq{seed_, static_cast<unsigned>(std::hash<std::string>{}(key.to_string()))};
    std::mt19937 rng(sq);
    const std::size_t span = size - lo;
    std::size_t i = lo + rng() % span;
    std::size_t j = i;
    while (j == i) j = lo + rng() % span;
    return {std::min(i, j), std::max(i, j)};
}

Rational GWEngine::compute_primary(const InvariantKey& key) {
    const long n = key.n, d = key.d;
    const auto& cs = key.codims;  // sorted ascending
    const long m = static_cast<long>(cs.size());

    if (dimension_gate(n, d, as_insertions(key)) != 0) return 0;
    if (!cs.empty() && (cs.front() < 0 || cs.back() > n)) return 0;

    if (d == 0) return (m == 3 && codim_sum(cs) == n) ? Rational(1) : Rational(0);

    // positive degree: fundamental class gives zero, divisors a factor d each
    if (!cs.empty() && cs.front() == 0) return 0;
    if (!cs.empty() && cs.front() == 1) {
        std::vector<long> reduced;
        Rational factor = 1;
        for (long c : cs) {
            if (c == 1)
                factor *= d;
            else
                reduced.push_back(c);
        }
        return factor * eval(InvariantKey::primary(n, d, reduced));
    }

    if (m == 0) return (n == 1 && d == 1) ? Rational(1) : Rational(0);
    if (m == 1) return 0;  // gate admits no such case at positive degree
    if (m == 2) return (d == 1 && cs[0] == n && cs[1] == n) ? Rational(1) : Rational(0);

    // Four-point exchange relation on the frame (H^(a-1), H, H^b, H^c): H^a
    // is the smallest insertion, H^b and H^c companions picked from the rest.
    // Solving the (12|34) = (13|24) relation for the original bracket leaves
    // three full-degree terms and the mixed-degree double sums. Every emitted
    // key is smaller in the order (d, count, -sum of codim^2).
    const long a = cs[0];
    auto [i1, i2] = pick_companions(key, 1);
    const long b = cs[i1], c = cs[i2];
    std::vector<long> rest;
    for (std::size_t i = 1; i < cs.size(); ++i)
        if (i != i1 && i != i2) rest.push_back(cs[i]);

    auto with3 = [&](long x, long y, long z) {
        std::vector<long> v = rest;
        v.push_back(x);
        v.push_back(y);
        v.push_back(z);
        return InvariantKey::primary(n, d, std::move(v));
    };

    Rational total = eval(with3(a - 1 + b, 1, c));  // (13|24), first factor classical
    total += eval(with3(a - 1, b, c + 1));          // (13|24), second factor classical
    total -= eval(with3(a - 1, 1, b + c));          // (12|34), second factor classical

    const ConstraintTuple rest_tuple =
        rest.empty() ? ConstraintTuple(n) : ConstraintTuple(n, rest);

    for (long d1 = 1; d1 < d; ++d1) {
        const long d2 = d - d1;
        for (long s = 0; s <= rest_tuple.size(); ++s) {
            for (const auto& ch : choose_sub_multisets(rest_tuple, s)) {
                auto side = [&](long x, long y, long u, long v) -> Rational {
                    // node class H^e fixed by the first factor's gate; the
                    // second factor is then automatically gated as well
                    const long e = d1 * (n + 1) + n + s - x - y - ch.codim_sum;
                    if (e < 0 || e > n) return 0;
                    std::vector<long> f1;
                    for (const auto& [cc, kk] : ch.taken)
                        for (long i = 0; i < kk; ++i) f1.push_back(cc);
                    f1.push_back(x);
                    f1.push_back(y);
                    f1.push_back(e);
                    Rational first = eval(InvariantKey::primary(n, d1, f1));
                    if (first.is_zero()) return 0;
                    std::vector<long> f2 = ch.rest.codims();
                    f2.push_back(n - e);
                    f2.push_back(u);
                    f2.push_back(v);
                    return first * eval(InvariantKey::primary(n, d2, f2));
                };
                Rational mult(ch.multiplicity);
                total += mult * side(a - 1, b, 1, c);  // (13|24) mixed
                total -= mult * side(a - 1, 1, b, c);  // (12|34) mixed
            }
        }
    }
    return total;
}

Rational GWEngine::compute_descendant(const InvariantKey& key) {
    const long n = key.n, d = key.d, j = key.psi_j, c = key.psi_c;
    const auto& cs = key.codims;
    const long m = static_cast<long>(cs.size());

    if (j == 0) {  // defensive: canonical form folds these into primary keys
        auto v = cs;
        v.push_back(c);
        return eval(InvariantKey::primary(n, d, v));
    }
    if (c < 0 || c > n) return 0;
    if (!cs.empty() && (cs.front() < 0 || cs.back() > n)) return 0;
    if (dimension_gate(n, d, as_insertions(key)) != 0) return 0;

    if (d == 0)
        return (m + 1 >= 3 && j == m - 2 && c + codim_sum(cs) == n) ? Rational(1)
                                                                    : Rational(0);

    // string: a fundamental-class companion lowers the cotangent power
    if (!cs.empty() && cs.front() == 0) {
        std::vector<long> reduced(cs.begin() + 1, cs.end());
        return desc_eval(n, d, j - 1, c, std::move(reduced));
    }

    if (j == 1 && c == 0)  // dilaton
        return Rational(m - 2) * eval(InvariantKey::primary(n, d, cs));

    if (m >= 2) {
        // topological recursion relation against two companions A, B: the
        // bracket splits over degree/insertion partitions, one side keeping
        // psi^(j-1) and a node class H^e, the other keeping A, B and the
        // complementary H^(n-e).
        auto [i1, i2] = pick_companions(key, 0);
        const long A = cs[i1], B = cs[i2];
        std::vector<long> rest;
        for (std::size_t i = 0; i < cs.size(); ++i)
            if (i != i1 && i != i2) rest.push_back(cs[i]);
        const ConstraintTuple rest_tuple =
            rest.empty() ? ConstraintTuple(n) : ConstraintTuple(n, rest);

        Rational total = 0;
        for (long d1 = 0; d1 <= d; ++d1) {
            const long d2 = d - d1;
            for (long s = 0; s <= rest_tuple.size(); ++s) {
                for (const auto& ch : choose_sub_multisets(rest_tuple, s)) {
                    const long e =
                        d1 * (n + 1) + n - 1 + s - (j - 1) - c - ch.codim_sum;
                    if (e < 0 || e > n) continue;
                    std::vector<long> f1;
                    for (const auto& [cc, kk] : ch.taken)
                        for (long i = 0; i < kk; ++i) f1.push_back(cc);
                    f1.push_back(e);
                    Rational first = desc_eval(n, d1, j - 1, c, std::move(f1));
                    if (first.is_zero()) continue;
                    std::vector<long> f2 = ch.rest.codims();
                    f2.push_back(n - e);
                    f2.push_back(A);
                    f2.push_back(B);
                    total += Rational(ch.multiplicity) * first *
                             eval(InvariantKey::primary(n, d2, f2));
                }
            }
        }
        return total;
    }

    // fewer than two companions: divisor equation backwards grows one, at the
    // cost of a correction term with the cotangent power lowered
    std::vector<long> grown = cs;
    grown.push_back(1);
    Rational lhs = eval(InvariantKey::descendant(n, d, j, c, std::move(grown)));
    Rational corr = (c + 1 <= n) ? desc_eval(n, d, j - 1, c + 1, cs) : Rational(0);
    return (lhs - corr) / Rational(d);
}

Rational jfunction_onepoint(long n, long d, long j, long c) {
    if (n < 1 || d < 1 || j < 0 || c < 0 || c > n) return 0;
    if (j + c != d * (n + 1) + n - 2) return 0;

    // Degree-d coefficient of the small J-series: product over m = 1..d of
    //   sum_{i=0..n} (-1)^i binom(n+i, i) H^i / m^(n+1+i)
    // in Q[H]/(H^(n+1)). The hbar exponent is tied to the H exponent, so it
    // is dropped; the answer is the H^(n-c) coefficient.
    std::vector<Rational> poly(static_cast<size_t>(n) + 1, Rational(0));
    poly[0] = 1;
    for (long m = 1; m <= d; ++m) {
        std::vector<Rational> factor(static_cast<size_t>(n) + 1, Rational(0));
        Integer mpow = 1;
        for (long t = 0; t < n + 1; ++t) mpow *= m;
        for (long i = 0; i <= n; ++i) {
            Integer num = binomial(n + i, i);
            if (i % 2) num = -num;
            factor[static_cast<size_t>(i)] = Rational(num, mpow);
            mpow *= m;
        }
        std::vector<Rational> next(static_cast<size_t>(n) + 1, Rational(0));
        for (long u = 0; u <= n; ++u) {
            if (poly[static_cast<size_t>(u)].is_zero()) continue;
            for (long v = 0; u + v <= n; ++v)
                next[static_cast<size_t>(u + v)] +=
                    poly[static_cast<size_t>(u)] * factor[static_cast<size_t>(v)];
        }
        poly = std::move(next);
    }
    return poly[static_cast<size_t>(n - c)];
}

}  // namespace rcc
