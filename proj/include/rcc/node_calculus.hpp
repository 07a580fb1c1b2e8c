#pragma once

// Intersection numbers on spaces of multicomponent rational curves glued at
// one common node. The node carries two kinds of classes: a0 = ev* H at the
// shared point, and eta_l = h_l(psi_1..psi_k), the complete homogeneous
// symmetric polynomial in the cotangent classes of the k branches. The
// cotangent classes come in two flavors: "modified" ones are pulled back
// along the map forgetting all constraint points (these appear in the
// level-one formulas), ordinary ones are the usual psi classes.

#include "rcc/constraints.hpp"
#include "rcc/gw_engine.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace rcc {

struct NodeClass {
    long a_power = 0;             // exponent of a0
    std::vector<long> eta_gens;   // multiset of degrees l, one per eta_l factor
    bool modified = true;

    NodeClass() = default;
    NodeClass(long a, std::vector<long> gens, bool mod = true)
        : a_power(a), eta_gens(std::move(gens)), modified(mod) {}
};

struct MulticomponentSpace {
    long n = 0;
    long d = 0;
    long k = 1;                 // number of components through the node
    ConstraintTuple mu;         // constraints, distributed over components
    long merged_node_codim = 0; // extra incidence codim concentrated at the node
    // codims of a designated pair of constraints forced onto different
    // components (used by the split two-component brackets)
    std::optional<std::pair<long, long>> separated;
};

// Kunneth weights of the small-diagonal class times a0^l: all (c_1..c_k)
// with 0 <= c_i <= n summing to n(k-1) + l, each with coefficient 1.
std::vector<std::vector<long>> diagonal_weights(long n, long k, long l);

// Expand a product of eta_l factors into ordered cotangent-exponent tuples:
// h_l contributes every degree-l monomial in k variables exactly once.
std::map<std::vector<long>, Integer> symmetric_expand(const std::vector<long>& eta_gens,
                                                      long k);

class NodeCalculus {
public:
    explicit NodeCalculus(GWEngine& engine) : eng_(engine) {}

    GWEngine& engine() { return eng_; }

    // <psi^j psibar^b ev*(H^c) ; mu>_d on one component. psibar is the
    // forgetful pullback; peeling one off either promotes it to an ordinary
    // psi or drops to a boundary term where the special point bubbles off
    // with j+1 of the constraints, which then merge at the attachment:
    //   M(j,b,c) = M(j+1,b-1,c) - sum_{|S|=j+1} M(0,b-1,c+merge(S); mu\S)
    // and b = 0 is the ordinary descendant.
    Rational modified_descendant(long n, long d, long j, long b, long c,
                                 const ConstraintTuple& mu);

    // <a0^l prod eta ; space>: sum over ordered positive degree splits,
    // grouped constraint distributions, diagonal weights and symmetric
    // expansion, of the product of per-component one-point numbers, divided
    // by k!. merged_node_codim adds to the a0 power.
    Rational vbar_number(const MulticomponentSpace& space, const NodeClass& cls);

    // Closed planar combinations for degree-d rational plane curves through
    // 3d-2 general points with a marked node:
    //   A = <a0^2, .>  (= the plane count n_d),  B = <a0 eta, .>,
    //   Delta = two-component count |V_2|, C = -Delta = <eta^2, .>.
    struct PlanarAggregates {
        Rational A, B, C, Delta;
    };
    PlanarAggregates planar_aggregates(long d);

private:
    GWEngine& eng_;
    std::mutex mutex_;
    std::unordered_map<std::string, Rational> memo_;
};

}  // namespace rcc
