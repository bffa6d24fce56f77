#include "cones/finite/structure.hpp"

#include "cones/core/equations.hpp"
#include "cones/core/order.hpp"
#include "cones/core/predicates.hpp"
#include "cones/errors.hpp"

namespace cones {

using Element = FiniteMonoid::element_type;

std::vector<Element> subcone_elements(const FiniteMonoid& m, Element a) {
  require_element(m, a, "a");
  std::vector<Element> out{0};
  if (a == 0) return out;
  for (Element x = 1; x < m.size(); ++x) {
    if (asymp(m, x, a, 0).is_true()) out.push_back(x);
  }
  return out;
}

FiniteMonoid subcone_at(const FiniteMonoid& m, Element a) {
  const auto elements = subcone_elements(m, a);
  FiniteMonoid sub = m.submonoid(elements);
  if (is_conical(m, 0).is_true() && !is_simple(sub, 0).is_true()) {
    throw InvariantViolation("M(" + m.label(a) + ") of a cone is not simple");
  }
  return sub;
}

std::vector<Element> decompose_multiple(const FiniteMonoid& m, Element a,
                                        Element b, std::size_t n, Element c) {
  for (auto x : {a, b, c}) require_element(m, x, "argument");
  if (n == 0) throw PreconditionError("n must be positive");
  if (m.add(a, b) != multiple(m, n, c)) {
    throw PreconditionError("decomposition requires a + b = n·c");
  }
  std::vector<std::size_t> weight_a(n + 1), weight_b(n + 1),
      ones(n + 1, 1), none(n + 1, 0);
  for (std::size_t k = 0; k <= n; ++k) {
    weight_a[k] = k;
    weight_b[k] = n - k;
  }
  const EquationSystem<Element> system(
      n + 1, {Equation<Element>{weight_a, 0, none, a},
              Equation<Element>{weight_b, 0, none, b},
              Equation<Element>{ones, 0, none, c}});
  std::vector<std::vector<Element>> candidates(n + 1, *m.summands(c));
  if (auto found = solve_over(m, system, std::move(candidates))) {
    return *found;
  }
  if (!is_refinement(m, 0).is_true()) {
    throw PreconditionError("monoid is not a refinement monoid");
  }
  throw InvariantViolation("no decomposition in a refinement monoid");
}

Element meet_in_class(const FiniteMonoid& m, Element a, Element b) {
  require_element(m, a, "a");
  require_element(m, b, "b");
  if (!asymp(m, a, b, 0).is_true()) {
    throw PreconditionError("meet_in_class requires a ≍ b");
  }
  if (*m.decide_leq(a, b)) return a;
  if (*m.decide_leq(b, a)) return b;
  for (Element c = 0; c < m.size(); ++c) {
    if (*m.decide_leq(c, a) && *m.decide_leq(c, b) &&
        asymp(m, c, a, 0).is_true()) {
      return c;
    }
  }
  if (!is_refinement(m, 0).is_true()) {
    throw PreconditionError("monoid is not a refinement monoid");
  }
  throw InvariantViolation("≍-class is not downward directed");
}

}  // namespace cones
