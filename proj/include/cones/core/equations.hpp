#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cones/backend.hpp"
#include "cones/decision.hpp"
#include "cones/errors.hpp"

namespace cones {

// Σ left[i]·x_i + left_const = Σ right[i]·x_i + right_const
template <class E>
struct Equation {
  std::vector<std::size_t> left;
  E left_const;
  std::vector<std::size_t> right;
  E right_const;
};

template <class E>
class EquationSystem {
 public:
  EquationSystem(std::size_t unknown_count, std::vector<Equation<E>> equations)
      : unknown_count_(unknown_count), equations_(std::move(equations)) {
    for (const auto& eq : equations_) {
      if (eq.left.size() != unknown_count_ ||
          eq.right.size() != unknown_count_) {
        throw PreconditionError(
            "equation coefficient vectors must have one entry per unknown");
      }
    }
  }

  std::size_t unknown_count() const noexcept { return unknown_count_; }
  const std::vector<Equation<E>>& equations() const noexcept {
    return equations_;
  }

 private:
  std::size_t unknown_count_;
  std::vector<Equation<E>> equations_;
};

enum class SearchOrder { Ascending, Descending };

struct SolveOptions {
  std::size_t ceiling = 10'000'000;
  SearchOrder order = SearchOrder::Ascending;
};

template <class E>
struct SolveOutcome {
  std::optional<std::vector<E>> assignment;
  // True when the candidates searched covered every possible value, so an
  // empty assignment proves there is no solution.
  bool exhaustive = false;
};

template <MonoidBackend M>
element_t<M> evaluate_side(const M& m, const std::vector<std::size_t>& coeffs,
                           const element_t<M>& constant,
                           const std::vector<element_t<M>>& values) {
  element_t<M> sum = constant;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) sum = m.add(sum, multiple(m, coeffs[i], values[i]));
  }
  return sum;
}

template <MonoidBackend M>
bool satisfies(const M& m, const Equation<element_t<M>>& eq,
               const std::vector<element_t<M>>& values) {
  return m.eq(evaluate_side(m, eq.left, eq.left_const, values),
              evaluate_side(m, eq.right, eq.right_const, values));
}

template <MonoidBackend M>
bool satisfies_all(const M& m, const EquationSystem<element_t<M>>& system,
                   const std::vector<element_t<M>>& values) {
  return std::all_of(system.equations().begin(), system.equations().end(),
                     [&](const auto& eq) { return satisfies(m, eq, values); });
}

namespace detail {

template <MonoidBackend M>
class Backtracker {
 public:
  using E = element_t<M>;

  Backtracker(const M& m, const EquationSystem<E>& system,
              std::vector<std::vector<E>> candidates, std::size_t ceiling)
      : m_(m),
        system_(system),
        candidates_(std::move(candidates)),
        ceiling_(ceiling),
        by_last_(system.unknown_count()) {
    for (std::size_t e = 0; e < system.equations().size(); ++e) {
      const auto& eq = system.equations()[e];
      std::optional<std::size_t> last;
      for (std::size_t i = 0; i < system.unknown_count(); ++i) {
        if (eq.left[i] != 0 || eq.right[i] != 0) last = i;
      }
      if (last) {
        by_last_[*last].push_back(e);
      } else {
        constant_.push_back(e);
      }
    }
  }

  std::optional<std::vector<E>> run() {
    std::vector<E> values(system_.unknown_count(), m_.zero());
    for (auto e : constant_) {
      if (!satisfies(m_, system_.equations()[e], values)) return std::nullopt;
    }
    if (system_.unknown_count() == 0) return values;
    if (descend(0, values)) return values;
    return std::nullopt;
  }

 private:
  bool descend(std::size_t index, std::vector<E>& values) {
    for (const auto& candidate : candidates_[index]) {
      if (++nodes_ > ceiling_) throw SearchCeilingExceeded(ceiling_);
      values[index] = candidate;
      bool ok = true;
      for (auto e : by_last_[index]) {
        if (!satisfies(m_, system_.equations()[e], values)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (index + 1 == values.size() || descend(index + 1, values)) {
        return true;
      }
    }
    return false;
  }

  const M& m_;
  const EquationSystem<E>& system_;
  std::vector<std::vector<E>> candidates_;
  std::size_t ceiling_;
  std::size_t nodes_ = 0;
  std::vector<std::vector<std::size_t>> by_last_;
  std::vector<std::size_t> constant_;
};

}  // namespace detail

// Depth-first search over explicit candidate lists, one per unknown.
template <MonoidBackend M>
std::optional<std::vector<element_t<M>>> solve_over(
    const M& m, const EquationSystem<element_t<M>>& system,
    std::vector<std::vector<element_t<M>>> candidates,
    const SolveOptions& options = {}) {
  if (candidates.size() != system.unknown_count()) {
    throw PreconditionError("one candidate list per unknown is required");
  }
  if (options.order == SearchOrder::Descending) {
    for (auto& list : candidates) std::reverse(list.begin(), list.end());
  }
  detail::Backtracker<M> search(m, system, std::move(candidates),
                                options.ceiling);
  return search.run();
}

// Finds an assignment of the unknowns satisfying every equation, trying
// values in the backend's enumeration order (the first unknown varies
// slowest).  Throws SearchCeilingExceeded when the node budget runs out.
template <MonoidBackend M>
SolveOutcome<element_t<M>> solve_system(
    const M& m, const EquationSystem<element_t<M>>& system, std::size_t bound,
    const SolveOptions& options = {}) {
  for (const auto& eq : system.equations()) {
    require_element(m, eq.left_const, "equation constant");
    require_element(m, eq.right_const, "equation constant");
  }
  const auto domain = m.enumerate(bound);
  std::vector<std::vector<element_t<M>>> candidates(system.unknown_count(),
                                                    domain);
  SolveOutcome<element_t<M>> out;
  out.assignment = solve_over(m, system, std::move(candidates), options);
  out.exhaustive = m.enumeration_complete(bound);
  return out;
}

template <class E>
struct RefinementMatrix {
  E c00, c01, c10, c11;
};

// The four-unknown system x_i0 + x_i1 = a_i, x_0i + x_1i = b_i with the
// unknowns ordered x00, x01, x10, x11.
template <class E>
EquationSystem<E> refinement_system(const E& zero, const E& a0, const E& a1,
                                    const E& b0, const E& b1) {
  auto eq = [&](std::vector<std::size_t> left, const E& rhs) {
    return Equation<E>{std::move(left), zero, {0, 0, 0, 0}, rhs};
  };
  return EquationSystem<E>(4, {eq({1, 1, 0, 0}, a0), eq({0, 0, 1, 1}, a1),
                               eq({1, 0, 1, 0}, b0), eq({0, 1, 0, 1}, b1)});
}

template <MonoidBackend M>
bool is_refinement_matrix(const M& m, const RefinementMatrix<element_t<M>>& c,
                          const element_t<M>& a0, const element_t<M>& a1,
                          const element_t<M>& b0, const element_t<M>& b1) {
  return m.eq(m.add(c.c00, c.c01), a0) && m.eq(m.add(c.c10, c.c11), a1) &&
         m.eq(m.add(c.c00, c.c10), b0) && m.eq(m.add(c.c01, c.c11), b1);
}

template <class E>
struct RefinementSearch {
  std::optional<RefinementMatrix<E>> matrix;
  bool exhaustive = false;
};

// Searches with each entry trying large values first, so c00 absorbs as
// much as it can (the northwest-corner choice).  Entries of row i are
// drawn from the summands of a_i when the backend can list them.
template <MonoidBackend M>
RefinementSearch<element_t<M>> refinement_search(
    const M& m, const element_t<M>& a0, const element_t<M>& a1,
    const element_t<M>& b0, const element_t<M>& b1, std::size_t bound,
    SolveOptions options = {.order = SearchOrder::Descending}) {
  for (const auto* x : {&a0, &a1, &b0, &b1}) require_element(m, *x, "entry");
  if (!m.eq(m.add(a0, a1), m.add(b0, b1))) {
    throw PreconditionError("refinement requires a0 + a1 = b0 + b1");
  }
  const auto system = refinement_system(m.zero(), a0, a1, b0, b1);
  std::vector<std::vector<element_t<M>>> candidates;
  bool exhaustive = m.enumeration_complete(bound);
  if constexpr (HasSummands<M>) {
    auto row0 = m.summands(a0);
    auto row1 = m.summands(a1);
    if (row0 && row1) {
      candidates = {*row0, *row0, *row1, *row1};
      exhaustive = true;
    }
  }
  if (candidates.empty()) {
    candidates.assign(4, m.enumerate(bound));
  }
  RefinementSearch<element_t<M>> out;
  out.exhaustive = exhaustive;
  if (auto values = solve_over(m, system, std::move(candidates), options)) {
    out.matrix = RefinementMatrix<element_t<M>>{(*values)[0], (*values)[1],
                                                (*values)[2], (*values)[3]};
    if (!is_refinement_matrix(m, *out.matrix, a0, a1, b0, b1)) {
      throw InvariantViolation("solver returned an invalid refinement matrix");
    }
  }
  return out;
}

template <MonoidBackend M>
std::optional<RefinementMatrix<element_t<M>>> find_refinement_matrix(
    const M& m, const element_t<M>& a0, const element_t<M>& a1,
    const element_t<M>& b0, const element_t<M>& b1, std::size_t bound) {
  return refinement_search(m, a0, a1, b0, b1, bound).matrix;
}

template <class E>
struct WsdSearch {
  std::optional<std::pair<E, E>> witness;
  bool exhaustive = false;
};

// Looks for x0, x1 with a0 + c = x0 + c, a1 + c = x1 + c, b = x0 + x1.
template <MonoidBackend M>
WsdSearch<element_t<M>> wsd_search(const M& m, const element_t<M>& a0,
                                   const element_t<M>& a1,
                                   const element_t<M>& b,
                                   const element_t<M>& c, std::size_t bound) {
  for (const auto* x : {&a0, &a1, &b, &c}) require_element(m, *x, "entry");
  if (!m.eq(m.add(m.add(a0, a1), c), m.add(b, c))) {
    throw PreconditionError("WSD instance requires a0 + a1 + c = b + c");
  }
  using E = element_t<M>;
  const E zero = m.zero();
  const EquationSystem<E> system(
      2, {Equation<E>{{1, 0}, c, {0, 0}, m.add(a0, c)},
          Equation<E>{{0, 1}, c, {0, 0}, m.add(a1, c)},
          Equation<E>{{1, 1}, zero, {0, 0}, b}});
  std::vector<std::vector<E>> candidates;
  bool exhaustive = m.enumeration_complete(bound);
  if constexpr (HasSummands<M>) {
    if (auto below = m.summands(b)) {
      candidates = {*below, *below};
      exhaustive = true;
    }
  }
  if (candidates.empty()) candidates.assign(2, m.enumerate(bound));
  WsdSearch<E> out;
  out.exhaustive = exhaustive;
  if (auto values = solve_over(m, system, std::move(candidates))) {
    out.witness = std::make_pair((*values)[0], (*values)[1]);
  }
  return out;
}

template <MonoidBackend M>
std::optional<std::pair<element_t<M>, element_t<M>>> check_wsd_instance(
    const M& m, const element_t<M>& a0, const element_t<M>& a1,
    const element_t<M>& b, const element_t<M>& c, std::size_t bound) {
  return wsd_search(m, a0, a1, b, c, bound).witness;
}

}  // namespace cones
