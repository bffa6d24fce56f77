#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cones/backend.hpp"
#include "cones/core/equations.hpp"
#include "cones/core/order.hpp"
#include "cones/core/pset.hpp"
#include "cones/decision.hpp"

namespace cones {

// "k·x", bracketing x when it is a compound word.
inline std::string scaled_text(std::uint64_t k, const std::string& x) {
  const bool compound = x.find_first_of(" *+") != std::string::npos;
  return std::to_string(k) + "·" + (compound ? "(" + x + ")" : x);
}

// Universal predicates range over m.enumerate(bound).  On an incomplete
// enumeration "True" therefore means "no counterexample inside the ball".
// Unknown is reserved for inner existential searches that ran out of room.

template <MonoidBackend M>
Decision is_conical(const M& m, std::size_t bound) {
  const auto xs = m.enumerate(bound);
  for (const auto& x : xs) {
    for (const auto& y : xs) {
      if (is_zero(m, m.add(x, y)) && !(is_zero(m, x) && is_zero(m, y))) {
        return Decision::no(m.describe(x) + " + " + m.describe(y) + " = 0");
      }
    }
  }
  return Decision::yes();
}

template <MonoidBackend M>
Decision is_cancellative(const M& m, std::size_t bound) {
  const auto xs = m.enumerate(bound);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (m.eq(xs[i], xs[j])) continue;
      for (const auto& z : xs) {
        if (m.eq(m.add(xs[i], z), m.add(xs[j], z))) {
          return Decision::no(m.describe(xs[i]) + " + " + m.describe(z) +
                              " = " + m.describe(xs[j]) + " + " +
                              m.describe(z));
        }
      }
    }
  }
  return Decision::yes();
}

// 2x = x + y = 2y forces x = y.
template <MonoidBackend M>
Decision is_separative(const M& m, std::size_t bound) {
  const auto xs = m.enumerate(bound);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto twice_x = m.add(xs[i], xs[i]);
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const auto& x = xs[i];
      const auto& y = xs[j];
      if (m.eq(x, y)) continue;
      if (m.eq(twice_x, m.add(x, y)) && m.eq(twice_x, m.add(y, y))) {
        return Decision::no(scaled_text(2, m.describe(x)) + " = " +
                            m.describe(x) + " + " + m.describe(y) + " = " +
                            scaled_text(2, m.describe(y)));
      }
    }
  }
  return Decision::yes();
}

// x + y = y forces x = 0.
template <MonoidBackend M>
Decision is_stably_finite(const M& m, std::size_t bound) {
  const auto xs = m.enumerate(bound);
  for (const auto& x : xs) {
    if (is_zero(m, x)) continue;
    for (const auto& y : xs) {
      if (m.eq(m.add(x, y), y)) {
        return Decision::no(m.describe(x) + " + " + m.describe(y) + " = " +
                            m.describe(y));
      }
    }
  }
  return Decision::yes();
}

template <MonoidBackend M>
Decision is_antisymmetric(const M& m, std::size_t bound) {
  const auto xs = m.enumerate(bound);
  Conjunction all;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (m.eq(xs[i], xs[j])) continue;
      const Decision up = leq_alg(m, xs[i], xs[j], bound);
      if (up.is_false()) continue;
      const Decision down = leq_alg(m, xs[j], xs[i], bound);
      if (down.is_false()) continue;
      if (up.is_true() && down.is_true()) {
        all.fail(m.describe(xs[i]) + " <= " + m.describe(xs[j]) + " <= " +
                 m.describe(xs[i]));
        break;
      }
      all.add(Decision::unknown(bound));
    }
    if (all.failed()) break;
  }
  return all.result();
}

// Every u that is not <= 0 is an order-unit of the ball.
template <MonoidBackend M>
Decision is_simple(const M& m, std::size_t bound) {
  const auto xs = m.enumerate(bound);
  Conjunction all;
  for (const auto& u : xs) {
    const Decision trivial = leq_alg(m, u, m.zero(), bound);
    if (trivial.is_true()) continue;
    for (const auto& x : xs) {
      Decision d = propto(m, x, u, bound);
      if (d.is_false()) {
        if (trivial.is_unknown()) d = Decision::unknown(bound);
        all.add(d.with_witness(m.describe(x) + " is not bounded by multiples of " +
                               m.describe(u)));
      } else {
        all.add(d);
      }
      if (all.failed()) return all.result();
    }
  }
  return all.result();
}

// px = py forces x = y for every generator p of P (which covers all of P:
// pq·x = pq·y gives q·x = q·y, then x = y).
template <MonoidBackend M>
Decision is_p_torsion_free(const M& m, const PSet& pset, std::size_t bound) {
  const auto xs = m.enumerate(bound);
  for (auto p : pset.generators()) {
    std::vector<element_t<M>> scaled;
    scaled.reserve(xs.size());
    for (const auto& x : xs) scaled.push_back(multiple(m, p, x));
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        if (m.eq(scaled[i], scaled[j]) && !m.eq(xs[i], xs[j])) {
          return Decision::no(scaled_text(p, m.describe(xs[i])) + " = " +
                              scaled_text(p, m.describe(xs[j])));
        }
      }
    }
  }
  return Decision::yes();
}

// px <= py forces x <= y for every generator p of P.
template <MonoidBackend M>
Decision is_p_unperforated(const M& m, const PSet& pset, std::size_t bound) {
  const auto xs = m.enumerate(bound);
  Conjunction all;
  for (auto p : pset.generators()) {
    std::vector<element_t<M>> scaled;
    scaled.reserve(xs.size());
    for (const auto& x : xs) scaled.push_back(multiple(m, p, x));
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = 0; j < xs.size(); ++j) {
        if (i == j) continue;
        const Decision conclusion = leq_alg(m, xs[i], xs[j], bound);
        if (conclusion.is_true()) continue;
        const Decision premise = leq_alg(m, scaled[i], scaled[j], bound);
        if (premise.is_false()) continue;
        if (premise.is_true() && conclusion.is_false()) {
          all.fail(scaled_text(p, m.describe(xs[i])) + " <= " +
                   scaled_text(p, m.describe(xs[j])) +
                   (premise.witness().empty() ? ""
                                              : " (" + premise.witness() + ")") +
                   " but " + m.describe(xs[i]) + " is not <= " +
                   m.describe(xs[j]));
          return all.result();
        }
        all.add(Decision::unknown(bound));
      }
    }
  }
  return all.result();
}

template <class E>
struct QuasiDivisionWitness {
  E u, v;
};

// Some u, v with 2u + 3v = x; u and v range over the summands of x when
// the backend lists them.
template <MonoidBackend M>
std::pair<std::optional<QuasiDivisionWitness<element_t<M>>>, bool>
quasi_division(const M& m, const element_t<M>& x, std::size_t bound) {
  std::vector<element_t<M>> pool;
  bool exhaustive = m.enumeration_complete(bound);
  bool have_pool = false;
  if constexpr (HasSummands<M>) {
    if (auto below = m.summands(x)) {
      pool = std::move(*below);
      exhaustive = true;
      have_pool = true;
    }
  }
  if (!have_pool) pool = m.enumerate(bound);
  std::vector<element_t<M>> doubles, triples;
  for (const auto& u : pool) {
    doubles.push_back(m.add(u, u));
    triples.push_back(m.add(doubles.back(), u));
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (m.eq(m.add(doubles[i], triples[j]), x)) {
        return {QuasiDivisionWitness<element_t<M>>{pool[i], pool[j]},
                exhaustive};
      }
    }
  }
  return {std::nullopt, exhaustive};
}

template <MonoidBackend M>
Decision is_quasi_divisible(const M& m, std::size_t bound) {
  Conjunction all;
  for (const auto& x : m.enumerate(bound)) {
    auto [witness, exhaustive] = quasi_division(m, x, bound);
    if (witness) continue;
    if (exhaustive) {
      all.fail("x=" + m.describe(x) + " is not 2u+3v");
      return all.result();
    }
    all.add(Decision::unknown(bound, "x=" + m.describe(x)));
  }
  return all.result();
}

template <MonoidBackend M>
Decision is_refinement(const M& m, std::size_t bound) {
  const auto xs = m.enumerate(bound);
  Conjunction all;
  for (const auto& a0 : xs) {
    for (const auto& a1 : xs) {
      const auto sum = m.add(a0, a1);
      for (const auto& b0 : xs) {
        for (const auto& b1 : xs) {
          if (!m.eq(m.add(b0, b1), sum)) continue;
          const auto found = refinement_search(m, a0, a1, b0, b1, bound);
          if (found.matrix) continue;
          const std::string where = m.describe(a0) + " + " + m.describe(a1) +
                                    " = " + m.describe(b0) + " + " +
                                    m.describe(b1);
          if (found.exhaustive) {
            all.fail(where + " has no refinement matrix");
            return all.result();
          }
          all.add(Decision::unknown(bound, where));
        }
      }
    }
  }
  return all.result();
}

}  // namespace cones
