#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cones/core/equations.hpp"
#include "cones/decision.hpp"
#include "cones/finite/finite_monoid.hpp"
#include "cones/presentation/exponent_vector.hpp"
#include "cones/presentation/presentation.hpp"
#include "cones/presentation/presented_monoid.hpp"

namespace cones {

// The submonoid of (Z+)^4 generated by a0=(1,1,0,0), a1=(0,0,1,1),
// b0=(1,0,1,0), b1=(0,1,0,1), presented on those four generators.
struct RPlus {
  Presentation presentation;             // <a0,a1,b0,b1 | a0+a1 = b0+b1>
  std::array<ExponentVector, 4> generators;  // as vectors in (Z+)^4
};
RPlus r_plus();

// v lies in the submonoid iff v0 + v3 == v1 + v2.
bool r_plus_member(const ExponentVector& v);

// Nonnegative (p0, p1, q0, q1) with v = p0 a0 + p1 a1 + q0 b0 + q1 b1, or
// nullopt when v is not a member.
std::optional<std::array<ExponentVector::value_type, 4>> r_plus_coefficients(
    const ExponentVector& v);

// Presentation of the amalgamated sum of B and C along e: A -> B and
// f: A -> C, where A is free on `a_generators` generators.  Generators are
// B's followed by C's (a C name clashing with a B name gets a trailing
// prime); relations are both sets plus e(a) = f(a) for each generator a.
Presentation pushout(std::size_t a_generators, const Presentation& b,
                     const Presentation& c,
                     const std::vector<ExponentVector>& e_images,
                     const std::vector<ExponentVector>& f_images);

// One generator per nonzero element (named by its label) and a relation
// g_x + g_y = g_{x+y} for every unordered pair.
Presentation to_presentation(const FiniteMonoid& m);
// The one-letter word (or the empty word) naming x in to_presentation(m).
ExponentVector element_word(const FiniteMonoid& m, FiniteMonoid::element_type x);

// Adjoins a refinement matrix for a0 + a1 = b0 + b1 by gluing (Z+)^4 to M
// along the R+ inclusion.  When an entry is zero the matrix exists in M
// already and nothing is built.
struct RefinementStep {
  bool degenerate = false;
  // Present when not degenerate: N, with generators e0..e3 then M's.
  std::optional<PresentedMonoid> extension;
  // Words in N, or in M when degenerate.
  RefinementMatrix<ExponentVector> matrix;
  std::size_t bound = 0;
  Decision matrix_valid = Decision::yes();
  Decision injective_on_ball = Decision::yes();
  Decision conical_on_ball = Decision::yes();
  Decision unitary = Decision::yes();
  Decision strongly_unitary = Decision::yes();

  // The copy of an M-word inside N.
  ExponentVector embed(const ExponentVector& m_word) const;
  bool all_checks_pass() const;
};

RefinementStep refinement_step(const Presentation& m, const ExponentVector& a0,
                               const ExponentVector& a1,
                               const ExponentVector& b0,
                               const ExponentVector& b1, std::size_t bound = 5,
                               std::size_t max_iterations = 10000);

RefinementStep refinement_step(const FiniteMonoid& m,
                               FiniteMonoid::element_type a0,
                               FiniteMonoid::element_type a1,
                               FiniteMonoid::element_type b0,
                               FiniteMonoid::element_type b1,
                               std::size_t bound = 5,
                               std::size_t max_iterations = 10000);

}  // namespace cones
