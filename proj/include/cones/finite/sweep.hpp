#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cones/decision.hpp"
#include "cones/finite/finite_monoid.hpp"

namespace cones {

struct SweepCheck {
  std::string name;
  Decision verdict;
};

struct SweepEntry {
  std::string monoid;
  std::vector<SweepCheck> checks;
};

// Invariants checked on one table:
//   the cancellative and separative congruences are the least ones whose
//   quotients have the property (all congruences listed);
//   separative and torsion quotients of a cone are cones, and so is the
//   cancellative one when the cone is stably finite;
//   P-torsion-free forces separative, quasi-divisible gives 2y <= x <= 3y;
//   on conical refinement monoids, decompose_multiple, meet_in_class and
//   subcone_at behave as documented.
SweepEntry sweep_monoid(const std::string& name, const FiniteMonoid& m);

// sweep_monoid over finite_corpus(), in corpus order.
std::vector<SweepEntry> corpus_sweep();

}  // namespace cones
