#pragma once

// Incidence-constraint bookkeeping. A ConstraintTuple is the unordered list
// of codimensions of the general linear subspaces a curve is required to
// meet: in P^3 a point is codim 3, a line codim 2, a plane codim 1. Order
// never matters, so the codims are kept sorted. Merging a subset of
// constraints (all conditions imposed at one point of the curve) replaces it
// by a single constraint whose codim is the sum; once that exceeds n the
// class is zero and the tuple reports itself empty.

#include "rcc/combinatorics.hpp"
#include "rcc/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rcc {

class ConstraintTuple {
public:
    ConstraintTuple() : n_(0) {}
    explicit ConstraintTuple(long n) : n_(n) {}
    ConstraintTuple(long n, std::vector<long> codims);

    long ambient() const { return n_; }
    long size() const { return static_cast<long>(codims_.size()); }
    long codim_sum() const;
    const std::vector<long>& codims() const { return codims_; }

    // Any constraint of codim > n cuts out the empty cycle.
    bool empty_cycle() const;

    void add(long codim);

    // Adjoin a general linear subspace of dimension r (codim n - r).
    ConstraintTuple with_subspace(long r) const;
    ConstraintTuple with_codim(long codim) const;

    // Replace the chosen sub-multiset (counts per codim value) by a single
    // merged constraint of the summed codim.
    ConstraintTuple merged(const std::map<long, long>& taken) const;
    // Remove the chosen sub-multiset without adding the merged constraint.
    ConstraintTuple without(const std::map<long, long>& taken) const;

    std::map<long, long> counts() const;

    friend bool operator==(const ConstraintTuple& a, const ConstraintTuple& b) {
        return a.n_ == b.n_ && a.codims_ == b.codims_;
    }

    std::string to_string() const;

private:
    long n_;
    std::vector<long> codims_;  // sorted ascending
};

// One way of choosing an unordered sub-multiset of a fixed size from a
// tuple: which codims were taken, their total, what remains, and how many
// labeled subsets collapse onto this choice.
struct SubMultisetChoice {
    std::map<long, long> taken;  // codim -> how many
    long codim_sum = 0;
    ConstraintTuple rest;
    Integer multiplicity;
};

std::vector<SubMultisetChoice> choose_sub_multisets(const ConstraintTuple& mu,
                                                    long size);

// One way of distributing a constraint tuple among k labeled parts, grouped:
// multiplicity counts the labeled assignments that give these part-contents.
// Summing multiplicities over all distributions gives k^N.
struct Distribution {
    std::vector<ConstraintTuple> parts;
    Integer multiplicity;
};

std::vector<Distribution> constraint_distributions(const ConstraintTuple& mu,
                                                   long k);

// Same, but two designated constraints (one of codim_a, one of codim_b) must
// land on different parts. Throws std::invalid_argument if mu lacks them.
std::vector<Distribution> constraint_distributions_separated(
    const ConstraintTuple& mu, long k, long codim_a, long codim_b);

}  // namespace rcc
