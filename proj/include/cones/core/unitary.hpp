#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "cones/backend.hpp"
#include "cones/core/order.hpp"
#include "cones/decision.hpp"

namespace cones {

struct UnitaryVerdict {
  Decision cofinal = Decision::yes();
  Decision unitary = Decision::yes();
  Decision strongly_unitary = Decision::yes();
};

// Bounded check that the submonoid picked out by `in_sub` sits unitarily
// (and strongly unitarily) inside `n`:
//   cofinal:   every y is below some member;
//   unitary:   cofinal, and a0 + b = a1 with a0, a1 members forces b member;
//   strong:    unitary, and m·b a member forces b member (2 <= m <= bound).
template <MonoidBackend N>
UnitaryVerdict is_unitary_extension(
    const std::function<bool(const element_t<N>&)>& in_sub, const N& n,
    std::size_t bound) {
  const auto ball = n.enumerate(bound);
  std::vector<element_t<N>> members;
  for (const auto& y : ball) {
    if (in_sub(y)) members.push_back(y);
  }
  if (members.empty() || !in_sub(n.zero())) {
    throw PreconditionError("submonoid must contain zero");
  }
  for (const auto& s : members) {
    for (const auto& t : members) {
      if (!in_sub(n.add(s, t))) {
        throw PreconditionError("submonoid is not closed under addition: " +
                                n.describe(s) + " + " + n.describe(t));
      }
    }
  }

  UnitaryVerdict out;
  Conjunction cofinal;
  for (const auto& y : ball) {
    bool found = false;
    bool unknown = false;
    for (const auto& s : members) {
      const Decision d = leq_alg(n, y, s, bound);
      if (d.is_true()) {
        found = true;
        break;
      }
      if (d.is_unknown()) unknown = true;
    }
    if (found) continue;
    if (!unknown && n.enumeration_complete(bound)) {
      cofinal.fail(n.describe(y) + " is above every member");
      break;
    }
    cofinal.add(Decision::unknown(bound, n.describe(y)));
  }
  out.cofinal = cofinal.result();

  Conjunction differences;
  for (const auto& a0 : members) {
    for (const auto& b : ball) {
      if (in_sub(b)) continue;
      const auto sum = n.add(a0, b);
      if (in_sub(sum)) {
        differences.fail(n.describe(a0) + " + " + n.describe(b) + " = " +
                         n.describe(sum) + " with " + n.describe(b) +
                         " outside");
        break;
      }
    }
    if (differences.failed()) break;
  }
  const Decision diff = differences.result();
  out.unitary = out.cofinal.is_false() ? out.cofinal
                : diff.is_false()      ? diff
                : out.cofinal.is_unknown() ? out.cofinal
                                           : diff;

  Conjunction divisions;
  for (const auto& b : ball) {
    if (in_sub(b)) continue;
    for (std::size_t k = 2; k <= bound; ++k) {
      if (in_sub(multiple(n, k, b))) {
        divisions.fail(std::to_string(k) + "·" + n.describe(b) +
                       " is a member but " + n.describe(b) + " is not");
        break;
      }
    }
    if (divisions.failed()) break;
  }
  const Decision div = divisions.result();
  out.strongly_unitary = out.unitary.is_false() ? out.unitary
                         : div.is_false()       ? div
                                                : out.unitary;
  return out;
}

}  // namespace cones
