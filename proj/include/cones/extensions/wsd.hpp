#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cones/backend.hpp"
#include "cones/core/order.hpp"
#include "cones/core/predicates.hpp"
#include "cones/decision.hpp"
#include "cones/errors.hpp"

namespace cones {

template <class E>
struct WsdElement {
  E x;
  std::uint64_t r0 = 0, r1 = 0;
};

// Adjoins a witness pair for a0 + a1 + c = b + c.  Elements are (x, r)
// with r in (Z+)^2 and the rules
//   (x, e0 + e1 + r) -> (x + b, r)
//   (x, e_i + r)     -> (x + a_i, r)   when c <= x
// Normal forms take the first rule as far as it goes, then the others.
template <MonoidBackend Base>
class WsdExtension {
 public:
  using base_element = element_t<Base>;
  using element_type = WsdElement<base_element>;

  WsdExtension(Base base, base_element a0, base_element a1, base_element b,
               base_element c, std::size_t leq_bound = 8)
      : base_(std::move(base)),
        a_{std::move(a0), std::move(a1)},
        b_(std::move(b)),
        c_(std::move(c)),
        leq_bound_(leq_bound) {
    for (const auto* x : {&a_[0], &a_[1], &b_, &c_}) {
      require_element(base_, *x, "entry");
    }
    for (const auto* x : {&a_[0], &a_[1], &b_}) {
      if (base_.eq(*x, base_.zero())) {
        throw PreconditionError("a0, a1 and b must be nonzero");
      }
    }
    if (!base_.eq(base_.add(base_.add(a_[0], a_[1]), c_),
                  base_.add(b_, c_))) {
      throw PreconditionError("a0 + a1 + c != b + c");
    }
  }

  const Base& base() const noexcept { return base_; }
  const base_element& a(int i) const { return a_[i]; }
  const base_element& b() const noexcept { return b_; }
  const base_element& c() const noexcept { return c_; }

  element_type j(const base_element& x) const { return {x, 0, 0}; }
  element_type x0() const { return {base_.zero(), 1, 0}; }
  element_type x1() const { return {base_.zero(), 0, 1}; }

  // c <= x in the base; an undecided query is an error, not a guess.
  bool above_c(const base_element& x) const {
    const Decision d = leq_alg(base_, c_, x, leq_bound_);
    if (d.is_unknown()) {
      throw UndecidableError("cannot decide " + base_.describe(c_) +
                             " <= " + base_.describe(x));
    }
    return d.is_true();
  }

  element_type normal_form(element_type s) const {
    const std::uint64_t k = std::min(s.r0, s.r1);
    s.x = base_.add(s.x, multiple(base_, k, b_));
    s.r0 -= k;
    s.r1 -= k;
    if ((s.r0 > 0 || s.r1 > 0) && above_c(s.x)) {
      s.x = base_.add(s.x, base_.add(multiple(base_, s.r0, a_[0]),
                                     multiple(base_, s.r1, a_[1])));
      s.r0 = s.r1 = 0;
    }
    return s;
  }

  // Every element one rule application away.
  std::vector<element_type> successors(const element_type& s) const {
    std::vector<element_type> out;
    if (s.r0 > 0 && s.r1 > 0) {
      out.push_back({base_.add(s.x, b_), s.r0 - 1, s.r1 - 1});
    }
    if ((s.r0 > 0 || s.r1 > 0) && above_c(s.x)) {
      if (s.r0 > 0) out.push_back({base_.add(s.x, a_[0]), s.r0 - 1, s.r1});
      if (s.r1 > 0) out.push_back({base_.add(s.x, a_[1]), s.r0, s.r1 - 1});
    }
    return out;
  }

  // Everything reachable in zero or more steps (finite: r shrinks).
  std::vector<element_type> descendants(const element_type& s) const {
    std::vector<element_type> seen{s};
    for (std::size_t i = 0; i < seen.size(); ++i) {
      for (auto& t : successors(seen[i])) {
        bool known = false;
        for (const auto& u : seen) {
          if (same(u, t)) {
            known = true;
            break;
          }
        }
        if (!known) seen.push_back(std::move(t));
      }
    }
    return seen;
  }

  element_type zero() const { return j(base_.zero()); }
  element_type add(const element_type& s, const element_type& t) const {
    return normal_form({base_.add(s.x, t.x), s.r0 + t.r0, s.r1 + t.r1});
  }
  bool eq(const element_type& s, const element_type& t) const {
    return same(normal_form(s), normal_form(t));
  }
  bool contains(const element_type& s) const { return base_.contains(s.x); }
  std::vector<element_type> enumerate(std::size_t bound) const {
    std::vector<element_type> out;
    const auto xs = base_.enumerate(bound);
    for (std::uint64_t total = 0; total <= bound; ++total) {
      for (std::uint64_t r0 = 0; r0 <= total; ++r0) {
        for (const auto& x : xs) {
          auto s = normal_form({x, r0, total - r0});
          bool seen = false;
          for (const auto& t : out) {
            if (same(s, t)) {
              seen = true;
              break;
            }
          }
          if (!seen) out.push_back(std::move(s));
        }
      }
    }
    return out;
  }
  // When c <= 0 every adjoined letter is absorbed, leaving the base.
  bool enumeration_complete(std::size_t bound) const {
    return base_.enumeration_complete(bound) &&
           leq_alg(base_, c_, base_.zero(), leq_bound_).is_true();
  }
  std::string describe(const element_type& s) const {
    std::string out = "(" + base_.describe(s.x);
    if (s.r0 || s.r1) {
      out += ", " + std::to_string(s.r0) + "e0+" + std::to_string(s.r1) + "e1";
    }
    return out + ")";
  }

 private:
  bool same(const element_type& s, const element_type& t) const {
    return s.r0 == t.r0 && s.r1 == t.r1 && base_.eq(s.x, t.x);
  }

  Base base_;
  base_element a_[2];
  base_element b_;
  base_element c_;
  std::size_t leq_bound_;
};

template <MonoidBackend Base>
WsdExtension<Base> wsd_extend(Base base, element_t<Base> a0,
                              element_t<Base> a1, element_t<Base> b,
                              element_t<Base> c, std::size_t leq_bound = 8) {
  return WsdExtension<Base>(std::move(base), std::move(a0), std::move(a1),
                            std::move(b), std::move(c), leq_bound);
}

// Two rewrites of one element always meet again.
template <MonoidBackend Base>
bool peak_joins(const WsdExtension<Base>& n,
                const typename WsdExtension<Base>::element_type& s) {
  const auto next = n.successors(s);
  for (std::size_t i = 0; i < next.size(); ++i) {
    const auto left = n.descendants(next[i]);
    for (std::size_t k = i + 1; k < next.size(); ++k) {
      const auto right = n.descendants(next[k]);
      bool meet = false;
      for (const auto& u : left) {
        for (const auto& v : right) {
          if (u.r0 == v.r0 && u.r1 == v.r1 && n.base().eq(u.x, v.x)) {
            meet = true;
            break;
          }
        }
        if (meet) break;
      }
      if (!meet) return false;
    }
  }
  return true;
}

struct ConfluenceSample {
  std::size_t peaks = 0;     // elements with two or more rewrites
  std::size_t failures = 0;
  std::string first_failure;
};

// Samples elements (x, r) with x from the base ball and r0, r1 <= r_max.
template <MonoidBackend Base>
ConfluenceSample sample_local_confluence(const WsdExtension<Base>& n,
                                         std::size_t ball, std::uint64_t r_max,
                                         std::size_t peaks_wanted,
                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto xs = n.base().enumerate(ball);
  std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
  std::uniform_int_distribution<std::uint64_t> count(0, r_max);
  ConfluenceSample out;
  std::size_t tries = 0;
  while (out.peaks < peaks_wanted && tries < 100 * peaks_wanted) {
    ++tries;
    typename WsdExtension<Base>::element_type s{xs[pick(rng)], count(rng),
                                                count(rng)};
    if (n.successors(s).size() < 2) continue;
    ++out.peaks;
    if (!peak_joins(n, s)) {
      if (out.failures++ == 0) out.first_failure = n.describe(s);
    }
  }
  return out;
}

struct WsdReport {
  Decision solves_instance = Decision::yes();  // x_i + j(c) = j(a_i) + j(c), x0 + x1 = j(b)
  Decision j_injective = Decision::yes();
  Decision j_order_embedding = Decision::yes();
  Decision case2_peak = Decision::yes();  // (c, e0 + e1) joins
  Decision conical = Decision::yes();
  bool all_hold() const {
    return solves_instance.is_true() && j_injective.is_true() &&
           j_order_embedding.is_true() && case2_peak.is_true() &&
           conical.is_true();
  }
};

template <MonoidBackend Base>
WsdReport check_wsd_extension(const WsdExtension<Base>& n, std::size_t bound) {
  const Base& base = n.base();
  WsdReport r;
  const auto jc = n.j(n.c());
  const bool solves = n.eq(n.add(n.x0(), jc), n.add(n.j(n.a(0)), jc)) &&
                      n.eq(n.add(n.x1(), jc), n.add(n.j(n.a(1)), jc)) &&
                      n.eq(n.add(n.x0(), n.x1()), n.j(n.b()));
  r.solves_instance = Decision::from_bool(solves).with_witness(
      "x0 = " + n.describe(n.x0()) + ", x1 = " + n.describe(n.x1()));

  const auto xs = base.enumerate(bound);
  Conjunction inj, order;
  for (const auto& x : xs) {
    for (const auto& y : xs) {
      if (n.eq(n.j(x), n.j(y)) != base.eq(x, y)) {
        inj.fail(base.describe(x) + ", " + base.describe(y));
      }
      const Decision below = leq_alg(base, x, y, bound);
      const Decision above = leq_alg(n, n.j(x), n.j(y), bound);
      // a witness below always lifts, so only an upstairs witness for a
      // false base relation (or a lost base witness) is a counterexample
      if ((below.is_true() && !above.is_true()) ||
          (above.is_true() && below.is_false())) {
        order.fail(base.describe(x) + " <= " + base.describe(y) + " is " +
                   below.verdict() + " below but " + above.verdict() +
                   " above");
      } else if (below.is_unknown()) {
        order.add(Decision::unknown(bound));
      }
    }
  }
  r.j_injective = inj.result();
  r.j_order_embedding = order.result();
  typename WsdExtension<Base>::element_type peak{n.c(), 1, 1};
  r.case2_peak = Decision::from_bool(peak_joins(n, peak))
                     .with_witness(n.describe(n.normal_form(peak)));
  r.conical = is_conical(n, bound);
  return r;
}

}  // namespace cones
