#pragma once

// Counts of one-component rational curves with a prescribed singularity:
// cusps in any P^n, triple points and tacnodes in P^2 and P^3. Each count is
// assembled from node-calculus brackets; the raw combination overcounts by a
// fixed symmetry factor, recorded in CountResult.

#include "rcc/node_calculus.hpp"

#include <stdexcept>
#include <string>

namespace rcc {

// Thrown when a query's constraints don't cut the space down to dimension
// zero; the message states the required balance.
struct BalanceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CountResult {
    Rational raw;
    long divisor = 1;
    Integer count;  // raw / divisor, checked to be a non-negative integer
};

// Builds the result, insisting that raw/divisor is a non-negative integer;
// anything else means a wiring error upstream and throws std::domain_error.
CountResult make_count(const Rational& raw, long divisor);

// Which cotangent classes the cusp formula is expanded in. The two give the
// same number; computing both is a strong cross-check.
enum class CuspClasses { Modified, Ordinary };

// Cusped one-component rational curves of degree d through mu, for any n.
// Balance: sum of codims minus number of constraints must be d(n+1) - 2.
Rational cusp_raw(NodeCalculus& nc, long n, long d, const ConstraintTuple& mu,
                  CuspClasses classes = CuspClasses::Modified);
CountResult cusp_count(NodeCalculus& nc, long n, long d, const ConstraintTuple& mu,
                       CuspClasses classes = CuspClasses::Modified);

// ----- plane curves (P^2), through 3d-2 general points -----

CountResult planar_triple_point(NodeCalculus& nc, long d);
CountResult planar_tacnode(NodeCalculus& nc, long d);

// Rational curves through 3d-1 points with one marked node: each of the n_d
// curves contributes each of its binom(d-1,2) nodes.
Rational planar_one_nodal_marked(NodeCalculus& nc, long d);

// Two-component curves through 3d-2 points with an ordered pair of distinct
// marked intersection points.
Rational planar_split_two_nodes(NodeCalculus& nc, long d);

struct PlanarNodeLemmas {
    Rational node_on_line;  // extra node constrained to a general line
    Rational node_eta;      // extra node weighted by the cotangent class
    Rational cusps;         // cusped curves through 3d-2 points
};
PlanarNodeLemmas planar_node_lemmas(NodeCalculus& nc, long d);

// ----- space curves (P^3), through p points and q lines -----
//
// The raw brackets below can be negative; only the final triple-point and
// tacnode counts are CountResults. Preconditions on 2p+q are loud.

Rational one_nodal_raw(NodeCalculus& nc, long d, long p, long q);     // 2p+q = 4d-1
Rational one_nodal_a(NodeCalculus& nc, long d, long p, long q);       // 2p+q = 4d-2
Rational one_nodal_a2(NodeCalculus& nc, long d, long p, long q);      // 2p+q = 4d-3
Rational one_nodal_a_eta(NodeCalculus& nc, long d, long p, long q);   // 2p+q = 4d-3
Rational one_nodal_eta2(NodeCalculus& nc, long d, long p, long q);    // 2p+q = 4d-3
Rational two_nodal_attached(NodeCalculus& nc, long d, long p, long q);  // 2p+q = 4d-3
Rational cusp_node_pair(NodeCalculus& nc, long d, long p, long q);      // 2p+q = 4d-3
Rational split_pair_a(NodeCalculus& nc, long d, long p, long q);        // 2p+q = 4d-3
Rational split_pair_eta(NodeCalculus& nc, long d, long p, long q);      // 2p+q = 4d-3
Rational cusp_marked_a(NodeCalculus& nc, long d, long p, long q);       // 2p+q = 4d-3
Rational cusp_marked_eta(NodeCalculus& nc, long d, long p, long q);     // 2p+q = 4d-3

CountResult space_triple_point(NodeCalculus& nc, long d, long p, long q);  // 2p+q = 4d-3
CountResult space_tacnode(NodeCalculus& nc, long d, long p, long q);       // 2p+q = 4d-3

}  // namespace rcc
