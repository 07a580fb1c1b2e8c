#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rcc/node_calculus.hpp"

#include <vector>

using namespace rcc;

namespace {

ConstraintTuple points(long n, long count) {
    return ConstraintTuple(n, std::vector<long>(static_cast<size_t>(count), n));
}

MulticomponentSpace space(long n, long d, long k, ConstraintTuple mu) {
    MulticomponentSpace s;
    s.n = n;
    s.d = d;
    s.k = k;
    s.mu = std::move(mu);
    return s;
}

}  // namespace

TEST_CASE("diagonal weights enumerate bounded tuples with the right total") {
    // k = 2 in the plane: tuples (c1, c2), 0 <= ci <= 2, summing to 2 + l
    auto w0 = diagonal_weights(2, 2, 0);
    CHECK(w0.size() == 3);  // (0,2) (1,1) (2,0)
    auto w1 = diagonal_weights(2, 2, 1);
    CHECK(w1.size() == 2);  // (1,2) (2,1)
    auto w2 = diagonal_weights(2, 2, 2);
    CHECK(w2.size() == 1);  // (2,2)
    CHECK(diagonal_weights(2, 2, 3).empty());

    for (const auto& t : w1) {
        CHECK(t.size() == 2);
        CHECK(t[0] + t[1] == 3);
        for (long c : t) {
            CHECK(c >= 0);
            CHECK(c <= 2);
        }
    }

    // k = 1: a single weight c1 = l when it fits
    CHECK(diagonal_weights(3, 1, 2) == std::vector<std::vector<long>>{{2}});
    CHECK(diagonal_weights(3, 1, 4).empty());

    // k = 3 in P^3: total 6 + l
    auto w3 = diagonal_weights(3, 3, 1);
    for (const auto& t : w3) CHECK(t[0] + t[1] + t[2] == 7);
    CHECK(w3.size() == 6);  // weak compositions of 7 into 3 parts <= 3
}

TEST_CASE("complete homogeneous symmetric expansion") {
    // h_2(x1, x2): every degree-2 monomial once
    auto h2 = symmetric_expand({2}, 2);
    CHECK(h2.size() == 3);
    CHECK(h2.at({2, 0}) == 1);
    CHECK(h2.at({1, 1}) == 1);
    CHECK(h2.at({0, 2}) == 1);

    // h_1^2(x1, x2) = x1^2 + 2 x1 x2 + x2^2
    auto h11 = symmetric_expand({1, 1}, 2);
    CHECK(h11.at({2, 0}) == 1);
    CHECK(h11.at({1, 1}) == 2);
    CHECK(h11.at({0, 2}) == 1);

    // empty product is the constant 1
    auto unit = symmetric_expand({}, 3);
    CHECK(unit.size() == 1);
    CHECK(unit.at({0, 0, 0}) == 1);

    // factor order is irrelevant
    CHECK(symmetric_expand({1, 2}, 2) == symmetric_expand({2, 1}, 2));

    // h_1(x1, x2, x3) has three monomials
    CHECK(symmetric_expand({1}, 3).size() == 3);
}

TEST_CASE("modified descendants: forgetful cotangent micro-values") {
    GWEngine eng;
    NodeCalculus nc(eng);
    // lines through two points with one forgetful cotangent at the node
    CHECK(nc.modified_descendant(2, 1, 0, 1, 0, points(2, 2)) == Rational(-2));
    // lines through one point with two forgetful cotangents
    CHECK(nc.modified_descendant(2, 1, 0, 2, 0, points(2, 1)) == Rational(0));
}

TEST_CASE("zero forgetful power reduces to the ordinary descendant") {
    GWEngine eng;
    NodeCalculus nc(eng);
    for (long d = 1; d <= 2; ++d)
        for (long j = 0; j <= 2; ++j)
            for (long c = 0; c <= 2; ++c) {
                // close the gate with point insertions when possible
                const long budget = 3 * d - j - c;
                if (budget < 0) continue;
                ConstraintTuple mu = points(2, budget);
                CHECK(nc.modified_descendant(2, d, j, 0, c, mu) ==
                      eng.descendant(2, d, j, c, mu.codims()));
            }
}

TEST_CASE("one component: eta factors multiply as plain cotangent powers") {
    GWEngine eng;
    NodeCalculus nc(eng);
    for (long d = 2; d <= 3; ++d) {
        auto sp = space(2, d, 1, points(2, 3 * d - 2));
        CHECK(nc.vbar_number(sp, NodeClass(0, {1, 1}, true)) ==
              nc.vbar_number(sp, NodeClass(0, {2}, true)));
        CHECK(nc.vbar_number(sp, NodeClass(0, {2, 1}, true)) ==
              nc.vbar_number(sp, NodeClass(0, {3}, true)));
    }
}

TEST_CASE("planar aggregates from the closed recursions") {
    GWEngine eng;
    NodeCalculus nc(eng);
    struct Row {
        long d;
        const char *A, *B, *C, *Delta;
    };
    const Row rows[] = {
        {1, "1", "-1", "0", "0"},
        {2, "1", "1", "-3", "3"},
        {3, "12", "24", "-42", "42"},
        {4, "620", "1564", "-2124", "2124"},
        {5, "87304", "248488", "-286104", "286104"},
    };
    for (const auto& r : rows) {
        auto agg = nc.planar_aggregates(r.d);
        CHECK(agg.A.to_string() == r.A);
        CHECK(agg.B.to_string() == r.B);
        CHECK(agg.C.to_string() == r.C);
        CHECK(agg.Delta.to_string() == r.Delta);
    }
}

TEST_CASE("node brackets reproduce the planar aggregates") {
    GWEngine eng;
    NodeCalculus nc(eng);
    for (long d = 1; d <= 6; ++d) {
        auto agg = nc.planar_aggregates(d);
        auto one = space(2, d, 1, points(2, 3 * d - 2));
        auto two = space(2, d, 2, points(2, 3 * d - 2));
        CHECK(nc.vbar_number(one, NodeClass(2, {}, true)) == agg.A);
        CHECK(nc.vbar_number(one, NodeClass(1, {1}, true)) == agg.B);
        CHECK(nc.vbar_number(one, NodeClass(0, {1, 1}, true)) == agg.C);
        CHECK(nc.vbar_number(two, NodeClass(0, {}, true)) == agg.Delta);
    }
}

TEST_CASE("overconstrained node brackets vanish") {
    GWEngine eng;
    NodeCalculus nc(eng);
    // pairs of lines through 5 general points do not exist; through 4 there
    // are binom(4,2)/... = 3 (split the points 2+2)
    CHECK(nc.vbar_number(space(2, 2, 2, points(2, 5)), NodeClass(0, {}, true)) ==
          Rational(0));
    CHECK(nc.vbar_number(space(2, 2, 2, points(2, 4)), NodeClass(0, {}, true)) ==
          Rational(3));
    // one cubic component with a^2 at the node: 7 points close the gate, 8 overshoot
    CHECK(nc.vbar_number(space(2, 3, 1, points(2, 8)), NodeClass(2, {}, true)) ==
          Rational(0));
    CHECK(nc.vbar_number(space(2, 3, 1, points(2, 7)), NodeClass(2, {}, true)) ==
          Rational(12));
}

TEST_CASE("node bracket input validation") {
    GWEngine eng;
    NodeCalculus nc(eng);
    auto sp = space(2, 2, 0, points(2, 4));
    CHECK_THROWS(nc.vbar_number(sp, NodeClass(0, {}, true)));
    auto sp2 = space(2, 0, 1, points(2, 1));
    CHECK_THROWS(nc.vbar_number(sp2, NodeClass(0, {}, true)));
}

TEST_CASE("merged node constraints shift the incidence power") {
    GWEngine eng;
    NodeCalculus nc(eng);
    // concentrating an extra codim-c condition at the node is the same as
    // raising the a-power by c
    for (long d = 2; d <= 3; ++d)
        for (long c = 1; c <= 2; ++c) {
            auto plain = space(2, d, 1, points(2, 3 * d - 2));
            auto merged = plain;
            merged.merged_node_codim = c;
            CHECK(nc.vbar_number(merged, NodeClass(2 - c, {}, true)) ==
                  nc.vbar_number(plain, NodeClass(2, {}, true)));
        }
}
