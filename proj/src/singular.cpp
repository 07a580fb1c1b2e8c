#include "rcc/singular.hpp"

#include <sstream>

namespace rcc {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw BalanceError(msg);
}

void require_pq(long d, long p, long q, long rhs_offset, const char* what) {
    if (p < 0 || q < 0 || d < 1)
        throw BalanceError(std::string(what) + ": need d >= 1, points/lines >= 0");
    const long need = 4 * d - rhs_offset;
    if (2 * p + q != need) {
        std::ostringstream os;
        os << what << ": balance requires 2*points + lines == 4d-" << rhs_offset
           << " (need " << need << ", got " << 2 * p + q << ")";
        throw BalanceError(os.str());
    }
}

ConstraintTuple pq_tuple(long p, long q) {
    ConstraintTuple mu(3);
    for (long i = 0; i < p; ++i) mu.add(3);
    for (long i = 0; i < q; ++i) mu.add(2);
    return mu;
}

MulticomponentSpace mk_space(long n, long d, long k, const ConstraintTuple& mu) {
    MulticomponentSpace sp;
    sp.n = n;
    sp.d = d;
    sp.k = k;
    sp.mu = mu;
    return sp;
}

// P^3 bracket shorthands; all lemma classes are of the modified flavor.
Rational vb1(NodeCalculus& nc, long d, const ConstraintTuple& mu, long a,
             std::vector<long> gens) {
    return nc.vbar_number(mk_space(3, d, 1, mu), NodeClass(a, std::move(gens), true));
}
Rational vb2(NodeCalculus& nc, long d, const ConstraintTuple& mu, long a,
             std::vector<long> gens) {
    return nc.vbar_number(mk_space(3, d, 2, mu), NodeClass(a, std::move(gens), true));
}
Rational vb2_sep(NodeCalculus& nc, long d, const ConstraintTuple& mu, long a,
                 std::vector<long> gens) {
    // mu must already contain the designated line (codim 2) and plane
    // (codim 1) that are forced onto different components
    MulticomponentSpace sp = mk_space(3, d, 2, mu);
    sp.separated = std::make_pair(2L, 1L);
    return nc.vbar_number(sp, NodeClass(a, std::move(gens), true));
}
Rational v3_plain(NodeCalculus& nc, long d, const ConstraintTuple& mu) {
    return nc.vbar_number(mk_space(3, d, 3, mu), NodeClass(0, {}, true));
}

}  // namespace

CountResult make_count(const Rational& raw, long divisor) {
    if (divisor <= 0) throw std::domain_error("make_count: divisor must be positive");
    CountResult r;
    r.raw = raw;
    r.divisor = divisor;
    Rational normalized = raw / Rational(divisor);
    r.count = normalized.to_integer();  // throws unless integral
    if (r.count < 0)
        throw std::domain_error("make_count: negative count " + normalized.to_string());
    return r;
}

Rational cusp_raw(NodeCalculus& nc, long n, long d, const ConstraintTuple& mu,
                  CuspClasses classes) {
    if (n < 2 || d < 1) throw BalanceError("cusp count: need n >= 2, d >= 1");
    {
        const long got = mu.codim_sum() - mu.size();
        const long need = d * (n + 1) - 2;
        if (got != need) {
            std::ostringstream os;
            os << "cusp count: balance requires sum(codims) - count == d(n+1)-2 "
               << "(need " << need << ", got " << got << ")";
            throw BalanceError(os.str());
        }
    }

    Rational total = 0;
    for (long k = 1; 2 * k <= n + 2; ++k) {
        Rational sign((k % 2) ? 1 : -1);
        const Rational kfact(factorial(k - 1));

        if (classes == CuspClasses::Modified) {
            for (long l = 0; l + 2 * k <= n + 2; ++l) {
                const long eta = n + 2 - 2 * k - l;
                Rational br = nc.vbar_number(mk_space(n, d, k, mu),
                                             NodeClass(l, {eta}, true));
                total += sign * kfact * Rational(binomial(n + 1, l)) * br;
            }
            continue;
        }

        // ordinary classes: constraints shed onto the node in groups of m,
        // with weight (-1)^m k^m relative to the modified expansion
        for (long m = 0; m + 2 * k <= n + 2 && m <= mu.size(); ++m) {
            Rational w = sign * kfact;
            if (m % 2) w = -w;
            Integer km = 1;
            for (long t = 0; t < m; ++t) km *= k;
            w *= Rational(km);

            Rational inner = 0;
            for (const auto& ch : choose_sub_multisets(mu, m)) {
                for (long l = 0; l + m + 2 * k <= n + 2; ++l) {
                    const long eta = n + 2 - 2 * k - m - l;
                    MulticomponentSpace sp = mk_space(n, d, k, ch.rest);
                    sp.merged_node_codim = ch.codim_sum;
                    Rational br =
                        nc.vbar_number(sp, NodeClass(l, {eta}, false));
                    if (!br.is_zero())
                        inner += Rational(ch.multiplicity) *
                                 Rational(binomial(n + 1, l)) * br;
                }
            }
            total += w * inner;
        }
    }
    return total;
}

CountResult cusp_count(NodeCalculus& nc, long n, long d, const ConstraintTuple& mu,
                       CuspClasses classes) {
    return make_count(cusp_raw(nc, n, d, mu, classes), 1);
}

CountResult planar_triple_point(NodeCalculus& nc, long d) {
    require(d >= 1, "planar triple point: need d >= 1");
    auto ag = nc.planar_aggregates(d);
    Rational raw = Rational(3 * (d * d - 6 * d + 10)) * ag.A -
                   Rational(3 * (d - 6)) * ag.B + Rational(6) * ag.C;
    return make_count(raw, 6);
}

CountResult planar_tacnode(NodeCalculus& nc, long d) {
    require(d >= 1, "planar tacnode: need d >= 1");
    auto ag = nc.planar_aggregates(d);
    Rational raw = Rational(2 * (3 * d - 11)) * ag.A + Rational(2 * (d - 9)) * ag.B -
                   Rational(8) * ag.C;
    return make_count(raw, 2);
}

Rational planar_one_nodal_marked(NodeCalculus& nc, long d) {
    return Rational(binomial(d - 1, 2)) * nc.engine().nd_plane(d);
}

Rational planar_split_two_nodes(NodeCalculus& nc, long d) {
    auto ag = nc.planar_aggregates(d);
    return Rational(2) * ag.A + Rational(2 * d) * ag.B + Rational(2) * ag.C;
}

PlanarNodeLemmas planar_node_lemmas(NodeCalculus& nc, long d) {
    auto ag = nc.planar_aggregates(d);
    PlanarNodeLemmas r;
    r.node_on_line = Rational(2 * d - 3) * ag.A - ag.B;
    r.node_eta = ag.A + Rational(d) * ag.B - ag.Delta;
    r.cusps = Rational(3) * ag.A + Rational(3) * ag.B + Rational(2) * ag.C;
    return r;
}

Rational one_nodal_raw(NodeCalculus& nc, long d, long p, long q) {
    require_pq(d, p, q, 1, "one-nodal count");
    const auto mu = pq_tuple(p, q);
    return Rational(2 * d - 6) * vb1(nc, d, mu, 2, {}) -
           Rational(4) * vb1(nc, d, mu, 1, {1}) - vb1(nc, d, mu, 0, {1, 1}) +
           vb2(nc, d, mu, 0, {});
}

Rational one_nodal_a(NodeCalculus& nc, long d, long p, long q) {
    require_pq(d, p, q, 2, "one-nodal through a plane");
    const auto mu = pq_tuple(p, q);
    return Rational(2 * d - 6) * vb1(nc, d, mu, 3, {}) -
           Rational(4) * vb1(nc, d, mu, 2, {1}) - vb1(nc, d, mu, 1, {1, 1}) +
           vb1(nc, d, mu.with_subspace(1), 2, {}) + vb2(nc, d, mu, 1, {});
}

Rational one_nodal_a2(NodeCalculus& nc, long d, long p, long q) {
    require_pq(d, p, q, 3, "one-nodal node-plane-squared");
    const auto mu = pq_tuple(p, q);
    return Rational(2) * vb1(nc, d, mu.with_subspace(1), 3, {}) -
           Rational(4) * vb1(nc, d, mu, 3, {1}) - vb1(nc, d, mu, 2, {1, 1}) +
           vb2(nc, d, mu, 2, {});
}

Rational one_nodal_a_eta(NodeCalculus& nc, long d, long p, long q) {
    require_pq(d, p, q, 3, "one-nodal mixed class");
    const auto mu = pq_tuple(p, q);
    return vb1(nc, d, mu.with_subspace(0), 1, {1}) +
           vb1(nc, d, mu.with_subspace(1), 2, {1}) +
           Rational(d) * vb1(nc, d, mu, 3, {1}) -
           (Rational(4) * vb2(nc, d, mu, 2, {}) + vb2(nc, d, mu, 1, {1}));
}

Rational one_nodal_eta2(NodeCalculus& nc, long d, long p, long q) {
    require_pq(d, p, q, 3, "one-nodal cotangent-squared");
    const auto mu = pq_tuple(p, q);
    return vb1(nc, d, mu.with_subspace(0), 0, {1, 1}) +
           vb1(nc, d, mu.with_subspace(1), 1, {1, 1}) +
           Rational(4) * vb1(nc, d, mu, 3, {1}) +
           Rational(d) * vb1(nc, d, mu, 2, {1, 1}) - v3_plain(nc, d, mu);
}

Rational two_nodal_attached(NodeCalculus& nc, long d, long p, long q) {
    require_pq(d, p, q, 3, "attached two-nodal count");
    const auto mu = pq_tuple(p, q);
    return vb2(nc, d, mu.with_subspace(0), 0, {}) +
           vb2(nc, d, mu.with_subspace(1), 1, {}) +
           Rational(3) * v3_plain(nc, d, mu) -
           (Rational(12 - d) * vb2(nc, d, mu, 2, {}) +
            Rational(4) * vb2(nc, d, mu, 1, {1}) +
            Rational(2) * vb2(nc, d, mu, 0, {2}) - vb2(nc, d, mu, 0, {1, 1}));
}

Rational cusp_node_pair(NodeCalculus& nc, long d, long p, long q) {
    require_pq(d, p, q, 3, "cusp-and-node count");
    const auto mu = pq_tuple(p, q);
    return Rational(6) * vb2(nc, d, mu, 2, {}) + Rational(4) * vb2(nc, d, mu, 1, {1}) +
           vb2(nc, d, mu, 0, {2}) - Rational(3) * v3_plain(nc, d, mu);
}

Rational split_pair_a(NodeCalculus& nc, long d, long p, long q) {
    require_pq(d, p, q, 3, "split-pair node-plane bracket");
    const auto mu = pq_tuple(p, q);
    const auto mu_lp = mu.with_subspace(1).with_subspace(2);
    return vb2_sep(nc, d, mu_lp, 1, {}) -
           (Rational(4) * vb2(nc, d, mu, 2, {}) + vb2(nc, d, mu, 1, {1}));
}

Rational split_pair_eta(NodeCalculus& nc, long d, long p, long q) {
    require_pq(d, p, q, 3, "split-pair cotangent bracket");
    const auto mu = pq_tuple(p, q);
    const auto mu_lp = mu.with_subspace(1).with_subspace(2);
    return vb2_sep(nc, d, mu_lp, 0, {1}) + vb2(nc, d, mu.with_subspace(0), 0, {}) +
           vb2(nc, d, mu.with_subspace(1), 1, {}) +
           Rational(d) * vb2(nc, d, mu, 2, {}) - Rational(3) * v3_plain(nc, d, mu);
}

Rational cusp_marked_a(NodeCalculus& nc, long d, long p, long q) {
    require_pq(d, p, q, 3, "cusp locus through a plane");
    const auto mu = pq_tuple(p, q);
    return Rational(6) * vb1(nc, d, mu, 3, {1}) + Rational(4) * vb1(nc, d, mu, 2, {1, 1}) +
           vb1(nc, d, mu, 1, {1, 1, 1}) -
           (Rational(4) * vb2(nc, d, mu, 2, {}) + vb2(nc, d, mu, 1, {1}));
}

Rational cusp_marked_eta(NodeCalculus& nc, long d, long p, long q) {
    require_pq(d, p, q, 3, "cusp locus cotangent bracket");
    const auto mu = pq_tuple(p, q);
    return Rational(4) * vb1(nc, d, mu, 3, {1}) + Rational(6) * vb1(nc, d, mu, 2, {1, 1}) +
           Rational(4) * vb1(nc, d, mu, 1, {1, 1, 1}) + vb1(nc, d, mu, 0, {1, 1, 1, 1}) -
           v3_plain(nc, d, mu);
}

CountResult space_triple_point(NodeCalculus& nc, long d, long p, long q) {
    require_pq(d, p, q, 3, "triple point count");
    Rational raw = one_nodal_raw(nc, d, p + 1, q) + one_nodal_a(nc, d, p, q + 1) +
                   Rational(16) * cusp_marked_a(nc, d, p, q) +
                   Rational(8) * cusp_marked_eta(nc, d, p, q) +
                   Rational(2) * two_nodal_attached(nc, d, p, q) -
                   (Rational(12 - d) * one_nodal_a2(nc, d, p, q) +
                    Rational(8) * one_nodal_a_eta(nc, d, p, q) +
                    Rational(2) * one_nodal_eta2(nc, d, p, q)) -
                   Rational(2) * cusp_node_pair(nc, d, p, q);
    return make_count(raw, 6);
}

CountResult space_tacnode(NodeCalculus& nc, long d, long p, long q) {
    require_pq(d, p, q, 3, "tacnode count");
    Rational raw = Rational(6) * one_nodal_a2(nc, d, p, q) + one_nodal_eta2(nc, d, p, q) +
                   Rational(8) * split_pair_a(nc, d, p, q) + split_pair_eta(nc, d, p, q) +
                   Rational(7) * cusp_node_pair(nc, d, p, q) -
                   Rational(20) * cusp_marked_a(nc, d, p, q) -
                   Rational(19) * cusp_marked_eta(nc, d, p, q) -
                   Rational(2) * two_nodal_attached(nc, d, p, q);
    return make_count(raw, 2);
}

}  // namespace rcc
