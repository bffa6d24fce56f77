#pragma once

#include <cstddef>
#include <vector>

#include "cones/finite/finite_monoid.hpp"

namespace cones {

// M(a) = {x : x ≍ a} ∪ {0} as a monoid in its own right, elements kept in
// M's order.  Throws InvariantViolation if M is conical and M(a) is not
// simple.
FiniteMonoid subcone_at(const FiniteMonoid& m, FiniteMonoid::element_type a);

// The elements of M(a) as indices of M.
std::vector<FiniteMonoid::element_type> subcone_elements(
    const FiniteMonoid& m, FiniteMonoid::element_type a);

// Given a + b = n·c in a refinement monoid, elements c_0..c_n with
//   a = Σ k·c_k,  b = Σ (n-k)·c_k,  c = Σ c_k.
// Found by exhaustive search over summands of c.
std::vector<FiniteMonoid::element_type> decompose_multiple(
    const FiniteMonoid& m, FiniteMonoid::element_type a,
    FiniteMonoid::element_type b, std::size_t n, FiniteMonoid::element_type c);

// For a ≍ b in a refinement monoid: some c with c <= a, c <= b and c ≍ a.
// Returns a (or b) when it is below the other, else the first such c in
// table order.
FiniteMonoid::element_type meet_in_class(const FiniteMonoid& m,
                                         FiniteMonoid::element_type a,
                                         FiniteMonoid::element_type b);

}  // namespace cones
