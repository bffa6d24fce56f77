#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cones/backend.hpp"
#include "cones/core/predicates.hpp"
#include "cones/core/unitary.hpp"
#include "cones/decision.hpp"
#include "cones/errors.hpp"

namespace cones {

template <class E>
struct DivisionElement {
  E x;
  std::uint64_t m = 0;
};

// Adjoins u with p·u = a.  Elements are pairs (x, m) standing for x + m·u;
// (x, m) ~ (y, n) iff m ≡ n (mod p) and x + ⌈m/p⌉a = y + ⌈n/p⌉a.
template <MonoidBackend Base>
class DivisionExtension {
 public:
  using base_element = element_t<Base>;
  using element_type = DivisionElement<base_element>;

  DivisionExtension(Base base, base_element a, std::uint64_t p)
      : base_(std::move(base)), a_(std::move(a)), p_(p) {
    if (p_ < 1) throw PreconditionError("p must be at least 1");
    require_element(base_, a_, "a");
    if constexpr (requires(const Base& b) { b.decidable_equality(); }) {
      if (!base_.decidable_equality()) {
        throw PreconditionError("base equality is not decidable");
      }
    }
    if (base_.eq(a_, base_.zero())) {
      throw PreconditionError("a must be nonzero");
    }
  }

  const Base& base() const noexcept { return base_; }
  const base_element& a() const noexcept { return a_; }
  std::uint64_t p() const noexcept { return p_; }

  element_type j(const base_element& x) const { return {x, 0}; }
  element_type u() const { return {base_.zero(), 1}; }

  element_type zero() const { return {base_.zero(), 0}; }
  element_type add(const element_type& s, const element_type& t) const {
    return {base_.add(s.x, t.x), s.m + t.m};
  }
  bool eq(const element_type& s, const element_type& t) const {
    if (s.m % p_ != t.m % p_) return false;
    return base_.eq(shifted(s), shifted(t));
  }
  bool contains(const element_type& s) const { return base_.contains(s.x); }
  // Every (x, m) equals (x + q·a, m mod p) for m = q·p + r with r > 0, or
  // (x + q·a, 0) when r = 0, so residues below p suffice.
  std::vector<element_type> enumerate(std::size_t bound) const {
    std::vector<element_type> out;
    for (std::uint64_t r = 0; r < p_; ++r) {
      for (const auto& x : base_.enumerate(bound)) {
        element_type s{x, r};
        bool seen = false;
        for (const auto& t : out) {
          if (eq(s, t)) {
            seen = true;
            break;
          }
        }
        if (!seen) out.push_back(std::move(s));
      }
    }
    return out;
  }
  bool enumeration_complete(std::size_t bound) const {
    return base_.enumeration_complete(bound);
  }
  std::string describe(const element_type& s) const {
    return "(" + base_.describe(s.x) + ", " + std::to_string(s.m) + ")";
  }

  // Members of the copy of the base are exactly the classes with m ≡ 0.
  bool in_image(const element_type& s) const { return s.m % p_ == 0; }

 private:
  base_element shifted(const element_type& s) const {
    const std::uint64_t up = (s.m + p_ - 1) / p_;
    return base_.add(s.x, multiple(base_, up, a_));
  }

  Base base_;
  base_element a_;
  std::uint64_t p_;
};

template <MonoidBackend Base>
DivisionExtension<Base> division_extend(Base base, element_t<Base> a,
                                        std::uint64_t p) {
  return DivisionExtension<Base>(std::move(base), std::move(a), p);
}

struct DivisionReport {
  Decision j_injective = Decision::yes();
  Decision p_u_is_a = Decision::yes();
  Decision shifted_equality = Decision::yes();  // (x,1) ~ (y,1) iff x + a = y + a
  Decision unitary = Decision::yes();
  Decision strongly_unitary = Decision::yes();
  Decision conical = Decision::yes();
  bool all_hold() const {
    return j_injective.is_true() && p_u_is_a.is_true() &&
           shifted_equality.is_true() && unitary.is_true() &&
           conical.is_true();
  }
};

template <MonoidBackend Base>
DivisionReport check_division_extension(const DivisionExtension<Base>& n,
                                        std::size_t bound) {
  const Base& base = n.base();
  const auto xs = base.enumerate(bound);
  DivisionReport r;
  Conjunction inj, shift;
  for (const auto& x : xs) {
    for (const auto& y : xs) {
      if (n.eq(n.j(x), n.j(y)) != base.eq(x, y)) {
        inj.fail("j(" + base.describe(x) + ") vs j(" + base.describe(y) + ")");
      }
      const bool lifted = n.eq({x, 1}, {y, 1});
      const bool below = base.eq(base.add(x, n.a()), base.add(y, n.a()));
      if (lifted != below) {
        shift.fail("(" + base.describe(x) + ",1) vs (" + base.describe(y) +
                   ",1)");
      }
    }
  }
  r.j_injective = inj.result();
  r.shifted_equality = shift.result();
  r.p_u_is_a = Decision::from_bool(n.eq(multiple(n, n.p(), n.u()), n.j(n.a())))
                   .with_witness(std::to_string(n.p()) + "·u ~ " +
                                 n.describe(n.j(n.a())));
  const auto verdict = is_unitary_extension<DivisionExtension<Base>>(
      [&n](const auto& s) { return n.in_image(s); }, n, bound);
  r.unitary = verdict.unitary;
  r.strongly_unitary = verdict.strongly_unitary;
  r.conical = is_conical(n, bound);
  return r;
}

}  // namespace cones
