#include "cones/finite/sweep.hpp"

#include "cones/core/order.hpp"
#include "cones/core/predicates.hpp"
#include "cones/errors.hpp"
#include "cones/finite/congruence.hpp"
#include "cones/finite/corpus.hpp"
#include "cones/finite/structure.hpp"

namespace cones {

namespace {

using Element = FiniteMonoid::element_type;

template <class HasProperty>
Decision least_congruence(const FiniteMonoid& m, const Congruence& canonical,
                          HasProperty&& has_property) {
  if (!has_property(quotient_monoid(m, canonical))) {
    return Decision::no("the canonical quotient lacks the property");
  }
  for (const auto& c : all_congruences(m)) {
    if (has_property(quotient_monoid(m, c)) &&
        !canonical.is_contained_in(c)) {
      std::string classes;
      for (auto id : c.classes()) classes += std::to_string(id);
      return Decision::no("congruence " + classes + " is not above it");
    }
  }
  return Decision::yes();
}

// Separative and torsion quotients of a cone are cones outright.  The
// cancellative one needs y + x = x to force y = 0, i.e. stable finiteness:
// in <g | g = 3g> the cancellative quotient is Z/2.
Decision quotients_stay_conical(const FiniteMonoid& m) {
  if (!is_conical(m, 0).is_true()) return Decision::yes("not conical");
  std::vector<std::pair<const char*, Quotient>> qs = {
      {"separative", separative_quotient(m)},
      {"torsion", p_torsion_quotient(m, PSet({2, 3}))}};
  if (is_stably_finite(m, 0).is_true()) {
    qs.insert(qs.begin(), {"cancellative", cancellative_quotient(m)});
  }
  for (const auto& [name, q] : qs) {
    if (!is_conical(q.monoid, 0).is_true()) {
      return Decision::no(std::string(name) + " quotient is not conical");
    }
  }
  return Decision::yes();
}

Decision torsion_free_is_separative(const FiniteMonoid& m) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    if (is_p_torsion_free(m, PSet({p}), 0).is_true() &&
        !is_separative(m, 0).is_true()) {
      return Decision::no(std::to_string(p) + "-torsion-free, not separative");
    }
  }
  return Decision::yes();
}

Decision quasi_divisible_bounds(const FiniteMonoid& m) {
  if (!is_quasi_divisible(m, 0).is_true()) {
    return Decision::yes("not quasi-divisible");
  }
  for (Element x = 0; x < m.size(); ++x) {
    const auto [w, exhaustive] = quasi_division(m, x, 0);
    if (!w) return Decision::no("no 2u+3v for " + m.label(x));
    const Element y = m.add(w->u, w->v);
    if (!*m.decide_leq(m.add(y, y), x) ||
        !*m.decide_leq(x, multiple(m, 3, y))) {
      return Decision::no("2y <= x <= 3y fails at x=" + m.label(x));
    }
  }
  return Decision::yes();
}

Decision decompositions(const FiniteMonoid& m) {
  for (Element c = 0; c < m.size(); ++c) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const Element nc = multiple(m, n, c);
      for (Element a = 0; a < m.size(); ++a) {
        for (Element b = 0; b < m.size(); ++b) {
          if (m.add(a, b) != nc) continue;
          const auto cs = decompose_multiple(m, a, b, n, c);
          Element sa = 0, sb = 0, sc = 0;
          for (std::size_t k = 0; k <= n; ++k) {
            sa = m.add(sa, multiple(m, k, cs[k]));
            sb = m.add(sb, multiple(m, n - k, cs[k]));
            sc = m.add(sc, cs[k]);
          }
          if (sa != a || sb != b || sc != c) {
            return Decision::no("bad decomposition of " + m.label(a) + " + " +
                                m.label(b) + " = " + std::to_string(n) + "*" +
                                m.label(c));
          }
        }
      }
    }
  }
  return Decision::yes();
}

Decision meets(const FiniteMonoid& m) {
  for (Element a = 0; a < m.size(); ++a) {
    for (Element b = 0; b < m.size(); ++b) {
      if (!asymp(m, a, b, 0).is_true()) continue;
      const Element c = meet_in_class(m, a, b);
      if (!*m.decide_leq(c, a) || !*m.decide_leq(c, b) ||
          !asymp(m, c, a, 0).is_true()) {
        return Decision::no("bad meet for " + m.label(a) + ", " + m.label(b));
      }
    }
  }
  return Decision::yes();
}

Decision subcones_simple(const FiniteMonoid& m) {
  for (Element a = 0; a < m.size(); ++a) {
    if (!is_simple(subcone_at(m, a), 0).is_true()) {
      return Decision::no("M(" + m.label(a) + ") is not simple");
    }
  }
  return Decision::yes();
}

Decision guarded(Decision (*f)(const FiniteMonoid&), const FiniteMonoid& m) {
  try {
    return f(m);
  } catch (const Error& e) {
    return Decision::no(e.what());
  }
}

}  // namespace

SweepEntry sweep_monoid(const std::string& name, const FiniteMonoid& m) {
  SweepEntry out{name, {}};
  auto add = [&](std::string check, Decision d) {
    out.checks.push_back({std::move(check), std::move(d)});
  };
  add("cancellative congruence is least",
      least_congruence(m, cancellative_quotient(m).congruence,
                       [](const FiniteMonoid& q) {
                         return is_cancellative(q, 0).is_true();
                       }));
  add("separative congruence is least",
      least_congruence(m, separative_quotient(m).congruence,
                       [](const FiniteMonoid& q) {
                         return is_separative(q, 0).is_true();
                       }));
  add("quotients of a cone are cones", quotients_stay_conical(m));
  add("torsion-free implies separative", torsion_free_is_separative(m));
  add("quasi-divisible gives 2y <= x <= 3y", quasi_divisible_bounds(m));
  if (m.size() <= 5 && is_conical(m, 0).is_true() &&
      is_refinement(m, 0).is_true()) {
    add("decompose_multiple", guarded(decompositions, m));
    add("meet_in_class", guarded(meets, m));
    add("subcone_at is simple", guarded(subcones_simple, m));
  }
  return out;
}

std::vector<SweepEntry> corpus_sweep() {
  std::vector<SweepEntry> out;
  for (const auto& [name, m] : finite_corpus()) {
    out.push_back(sweep_monoid(name, m));
  }
  return out;
}

}  // namespace cones
