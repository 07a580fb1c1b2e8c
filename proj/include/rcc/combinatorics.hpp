#pragma once

// Small exact-combinatorics toolbox shared by the recursion engines:
// binomials, factorials, compositions of a degree into positive parts, and
// the expected-dimension gate for genus-zero spaces of stable maps to P^n.

#include "rcc/rational.hpp"

#include <vector>

namespace rcc {

// binom(n, k) with the usual convention: 0 whenever k < 0 or k > n or n < 0.
Integer binomial(long n, long k);

Integer factorial(long n);

// All ordered tuples of k positive integers summing to d.
// Returns binom(d-1, k-1) tuples; empty when d < k or k <= 0.
std::vector<std::vector<long>> positive_compositions(long d, long k);

// Descendant insertion: psi-power j on a class of codimension a.
struct Insertion {
    long psi = 0;    // power of the cotangent class at the point
    long codim = 0;  // codimension of the incidence class (0..n)
};

// Expected dimension of the cut-down space minus what the insertions use:
//   [ d(n+1) + n - 3 + m ]  -  sum_i (psi_i + codim_i),  m = #insertions.
// The invariant vanishes unless this is zero.
long dimension_gate(long n, long d, const std::vector<Insertion>& insertions);

}  // namespace rcc
