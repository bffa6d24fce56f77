#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cones/backend.hpp"
#include "cones/decision.hpp"

namespace cones {

// x <= y in the algebraic preorder: some z gives x + z = y.
template <MonoidBackend M>
Decision leq_alg(const M& m, const element_t<M>& x, const element_t<M>& y,
                 std::size_t bound) {
  require_element(m, x, "left operand");
  require_element(m, y, "right operand");
  if constexpr (HasExactOrder<M>) {
    if (auto exact = m.decide_leq(x, y)) {
      return Decision::from_bool(*exact);
    }
  }
  if constexpr (HasSummands<M>) {
    // every z with x + z = y satisfies z <= y.
    if (auto below = m.summands(y)) {
      for (const auto& z : *below) {
        if (m.eq(m.add(x, z), y)) return Decision::yes("z=" + m.describe(z));
      }
      return Decision::no();
    }
  }
  for (const auto& z : m.enumerate(bound)) {
    if (m.eq(m.add(x, z), y)) return Decision::yes("z=" + m.describe(z));
  }
  if (m.enumeration_complete(bound)) return Decision::no();
  return Decision::unknown(bound);
}

// x ∝ y: x <= n·y for some positive integer n.
//
// Complete backends search n far enough for the multiples of y to cycle, so
// they never answer Unknown.  Elsewhere a cycle in n·y also settles the
// question.
template <MonoidBackend M>
Decision propto(const M& m, const element_t<M>& x, const element_t<M>& y,
                std::size_t bound) {
  require_element(m, x, "left operand");
  require_element(m, y, "right operand");
  if constexpr (HasExactPropto<M>) {
    if (auto exact = m.decide_propto(x, y)) return Decision::from_bool(*exact);
  }
  std::size_t limit = bound < 1 ? 1 : bound;
  if (m.enumeration_complete(bound)) {
    limit = std::max(limit, m.enumerate(bound).size() + 1);
  }
  std::vector<element_t<M>> seen;
  bool inner_unknown = false;
  element_t<M> ny = m.zero();
  for (std::size_t n = 1; n <= limit; ++n) {
    ny = m.add(ny, y);
    for (const auto& earlier : seen) {
      if (m.eq(earlier, ny)) {
        // n·y repeats: every multiple has been tested already.
        if (inner_unknown) return Decision::unknown(bound);
        return Decision::no();
      }
    }
    seen.push_back(ny);
    const Decision d = leq_alg(m, x, ny, bound);
    if (d.is_true()) return Decision::yes("n=" + std::to_string(n));
    if (d.is_unknown()) inner_unknown = true;
  }
  return Decision::unknown(bound);
}

// x ≍ y: x ∝ y and y ∝ x.
template <MonoidBackend M>
Decision asymp(const M& m, const element_t<M>& x, const element_t<M>& y,
               std::size_t bound) {
  const Decision forward = propto(m, x, y, bound);
  if (forward.is_false()) return forward;
  const Decision backward = propto(m, y, x, bound);
  if (backward.is_false()) return backward;
  if (forward.is_unknown()) return forward;
  if (backward.is_unknown()) return backward;
  return Decision::yes(forward.witness() + ";" + backward.witness());
}

}  // namespace cones
