#pragma once

#include <string>
#include <vector>

#include "cones/finite/finite_monoid.hpp"

namespace cones {

struct NamedMonoid {
  std::string name;
  FiniteMonoid monoid;
};

// {0, 1, inf} with 1 + 1 = inf and inf absorbing.
FiniteMonoid three_chain();

// {0, x, y, s} with 2x = 2y = x + y = s and s absorbing.
FiniteMonoid four_element_collapse();

// The curated set of small finite commutative monoids used by the
// property sweeps: cyclic monoids, groups, semilattices, truncations and
// products, every one with at most six elements.
const std::vector<NamedMonoid>& finite_corpus();

}  // namespace cones
