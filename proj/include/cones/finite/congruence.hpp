#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "cones/core/pset.hpp"
#include "cones/finite/finite_monoid.hpp"

namespace cones {

// A partition of a finite monoid's elements.  Class ids are numbered by
// first appearance, so the class of 0 is always class 0 and two
// congruences are equal exactly when their class vectors are.
class Congruence {
 public:
  using Element = FiniteMonoid::element_type;

  explicit Congruence(std::vector<std::uint32_t> class_of);
  static Congruence identity(std::size_t n);

  std::size_t size() const noexcept { return class_of_.size(); }
  std::size_t class_count() const noexcept { return class_count_; }
  std::uint32_t class_of(Element x) const { return class_of_.at(x); }
  bool related(Element x, Element y) const {
    return class_of(x) == class_of(y);
  }
  const std::vector<std::uint32_t>& classes() const noexcept {
    return class_of_;
  }

  // Compatible with addition: x~x', y~y' give x+y ~ x'+y'.
  bool is_compatible_with(const FiniteMonoid& m) const;

  // Every pair related here is related in `other`.
  bool is_contained_in(const Congruence& other) const;

  // Smallest element of each class, in class order.
  std::vector<Element> representatives() const;

  friend bool operator==(const Congruence&, const Congruence&) = default;

 private:
  std::vector<std::uint32_t> class_of_;
  std::size_t class_count_ = 0;
};

struct Quotient {
  FiniteMonoid monoid;
  Congruence congruence;
};

// Smallest congruence containing the given pairs: union-find closed under
// translation by every element until nothing merges.
Congruence congruence_closure(
    const FiniteMonoid& m,
    const std::vector<std::pair<Congruence::Element, Congruence::Element>>&
        pairs);

// M/≡ with each class labelled by its smallest element.
FiniteMonoid quotient_monoid(const FiniteMonoid& m, const Congruence& c);

// x ≡ y iff x + z = y + z for some z.
Quotient cancellative_quotient(const FiniteMonoid& m);

// x ≡ y iff n·x + y = (n+1)·x and x + n·y = (n+1)·y for some n >= 1, closed
// under the congruence generated.  n runs up to |M| + 1.
Quotient separative_quotient(const FiniteMonoid& m);

// x ≡ y iff p·x = p·y for some p in P.
Quotient p_torsion_quotient(const FiniteMonoid& m, const PSet& pset);

// x ≡ y iff x <= y and y <= x.
Quotient antisymmetric_quotient(const FiniteMonoid& m);

// Every congruence on M, listed by restricted growth string.  Bell(|M|)
// partitions are tried, so keep |M| small.
std::vector<Congruence> all_congruences(const FiniteMonoid& m);

// The natural projection M -> M/≡ is a homomorphism onto the quotient.
bool projection_is_homomorphism(const FiniteMonoid& m, const Quotient& q);

}  // namespace cones
