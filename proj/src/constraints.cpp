#include "rcc/constraints.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rcc {

ConstraintTuple::ConstraintTuple(long n, std::vector<long> codims)
    : n_(n), codims_(std::move(codims)) {
    for (long c : codims_)
        if (c < 1) throw std::invalid_argument("ConstraintTuple: codim < 1");
    std::sort(codims_.begin(), codims_.end());
}

long ConstraintTuple::codim_sum() const {
    long s = 0;
    for (long c : codims_) s += c;
    return s;
}

bool ConstraintTuple::empty_cycle() const {
    return !codims_.empty() && codims_.back() > n_;
}

void ConstraintTuple::add(long codim) {
    if (codim < 1) throw std::invalid_argument("ConstraintTuple: codim < 1");
    codims_.insert(std::upper_bound(codims_.begin(), codims_.end(), codim), codim);
}

ConstraintTuple ConstraintTuple::with_subspace(long r) const {
    if (r < 0 || r >= n_)
        throw std::invalid_argument("ConstraintTuple: subspace dimension out of range");
    return with_codim(n_ - r);
}

ConstraintTuple ConstraintTuple::with_codim(long codim) const {
    ConstraintTuple t = *this;
    t.add(codim);
    return t;
}

ConstraintTuple ConstraintTuple::without(const std::map<long, long>& taken) const {
    auto cnt = counts();
    for (const auto& [c, k] : taken) {
        auto it = cnt.find(c);
        if (it == cnt.end() || it->second < k)
            throw std::invalid_argument("ConstraintTuple: removing absent constraints");
        it->second -= k;
    }
    ConstraintTuple t(n_);
    for (const auto& [c, k] : cnt)
        for (long i = 0; i < k; ++i) t.codims_.push_back(c);
    std::sort(t.codims_.begin(), t.codims_.end());
    return t;
}

ConstraintTuple ConstraintTuple::merged(const std::map<long, long>& taken) const {
    ConstraintTuple t = without(taken);
    long sum = 0;
    for (const auto& [c, k] : taken) sum += c * k;
    if (sum > 0) t.add(sum);
    return t;
}

std::map<long, long> ConstraintTuple::counts() const {
    std::map<long, long> m;
    for (long c : codims_) ++m[c];
    return m;
}

std::string ConstraintTuple::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < codims_.size(); ++i) {
        if (i) os << ",";
        os << codims_[i];
    }
    os << "]";
    return os.str();
}

std::vector<SubMultisetChoice> choose_sub_multisets(const ConstraintTuple& mu,
                                                    long size) {
    std::vector<SubMultisetChoice> out;
    if (size < 0 || size > mu.size()) return out;
    auto cnt = mu.counts();
    std::vector<std::pair<long, long>> groups(cnt.begin(), cnt.end());

    std::map<long, long> taken;
    auto rec = [&](auto&& self, size_t gi, long remaining, Integer mult) -> void {
        if (remaining == 0) {
            SubMultisetChoice ch;
            ch.taken = taken;
            for (const auto& [c, k] : taken) ch.codim_sum += c * k;
            ch.rest = mu.without(taken);
            ch.multiplicity = mult;
            out.push_back(std::move(ch));
            return;
        }
        if (gi == groups.size()) return;
        auto [c, avail] = groups[gi];
        long cap = std::min(avail, remaining);
        for (long t = 0; t <= cap; ++t) {
            if (t > 0) taken[c] = t;
            self(self, gi + 1, remaining - t, mult * binomial(avail, t));
            taken.erase(c);
        }
    };
    rec(rec, 0, size, Integer(1));
    return out;
}

std::vector<Distribution> constraint_distributions(const ConstraintTuple& mu,
                                                   long k) {
    std::vector<Distribution> out;
    if (k <= 0) return out;
    auto cnt = mu.counts();
    std::vector<std::pair<long, long>> groups(cnt.begin(), cnt.end());
    size_t kk = static_cast<size_t>(k);

    // per group, how many constraints of that codim each part receives
    std::vector<std::vector<long>> split(groups.size());

    auto emit = [&](const Integer& mult) {
        Distribution d;
        d.parts.assign(kk, ConstraintTuple(mu.ambient()));
        for (size_t g = 0; g < groups.size(); ++g)
            for (size_t p = 0; p < kk; ++p)
                for (long i = 0; i < split[g][p]; ++i) d.parts[p].add(groups[g].first);
        d.multiplicity = mult;
        out.push_back(std::move(d));
    };

    auto rec = [&](auto&& self, size_t gi, Integer mult) -> void {
        if (gi == groups.size()) {
            emit(mult);
            return;
        }
        long m = groups[gi].second;
        std::vector<long> s(kk, 0);
        // s runs over weak compositions of m into k parts; the number of
        // labeled assignments is the multinomial, accumulated as binomials.
        auto comp = [&](auto&& inner, size_t part, long left, Integer m2) -> void {
            if (part == kk - 1) {
                s[part] = left;
                split[gi] = s;
                self(self, gi + 1, mult * m2);
                return;
            }
            for (long t = 0; t <= left; ++t) {
                s[part] = t;
                inner(inner, part + 1, left - t, m2 * binomial(left, t));
            }
        };
        comp(comp, 0, m, Integer(1));
    };
    rec(rec, 0, Integer(1));
    return out;
}

std::vector<Distribution> constraint_distributions_separated(
    const ConstraintTuple& mu, long k, long codim_a, long codim_b) {
    auto cnt = mu.counts();
    --cnt[codim_a];
    --cnt[codim_b];
    for (const auto& [c, m] : cnt)
        if (m < 0)
            throw std::invalid_argument(
                "constraint_distributions_separated: designated constraint absent");

    std::map<long, long> strip;
    strip[codim_a] += 1;
    strip[codim_b] += 1;
    ConstraintTuple rest = mu.without(strip);

    std::vector<Distribution> out;
    for (const auto& base : constraint_distributions(rest, k)) {
        for (long i = 0; i < k; ++i)
            for (long j = 0; j < k; ++j) {
                if (i == j) continue;
                Distribution d = base;
                d.parts[static_cast<size_t>(i)].add(codim_a);
                d.parts[static_cast<size_t>(j)].add(codim_b);
                out.push_back(std::move(d));
            }
    }
    return out;
}

}  // namespace rcc
