#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cones/presentation/exponent_vector.hpp"
#include "cones/presentation/presentation.hpp"

namespace cones {

// MonoidBackend over a presentation.  Elements are words; equality is
// normal-form equality.  The ball of radius b is the set of irreducible
// words of degree <= b (one per element whose normal form is that short),
// in graded-lex order.
class PresentedMonoid {
 public:
  using element_type = ExponentVector;

  explicit PresentedMonoid(Presentation p,
                           std::size_t max_iterations = 10000);
  PresentedMonoid(Presentation p, RewriteSystem system);

  const Presentation& presentation() const noexcept { return presentation_; }
  const RewriteSystem& system() const noexcept { return system_; }
  bool decidable_equality() const noexcept { return system_.is_complete(); }

  ExponentVector normal_form(const ExponentVector& w) const;
  ExponentVector generator(std::size_t i) const {
    return presentation_.generator(i);
  }

  // MonoidBackend
  ExponentVector zero() const { return presentation_.word(); }
  ExponentVector add(const ExponentVector& x, const ExponentVector& y) const;
  bool eq(const ExponentVector& x, const ExponentVector& y) const;
  bool contains(const ExponentVector& x) const {
    return x.size() == presentation_.generator_count();
  }
  std::vector<ExponentVector> enumerate(std::size_t bound) const;
  bool enumeration_complete(std::size_t bound) const;
  std::string describe(const ExponentVector& x) const {
    return presentation_.format(x);
  }

 private:
  // Irreducible words of each degree, built lazily up to `degree`.
  std::vector<ExponentVector> irreducible_of_degree(std::size_t degree) const;

  Presentation presentation_;
  RewriteSystem system_;
};

// The free commutative monoid (Z+)^d with the exact componentwise order.
// Its ball of radius b is every vector of degree <= b, graded-lex ordered.
class FreeMonoid {
 public:
  using element_type = ExponentVector;

  explicit FreeMonoid(std::size_t rank) : rank_(rank) {}

  std::size_t rank() const noexcept { return rank_; }
  ExponentVector element(std::vector<ExponentVector::value_type> v) const;

  ExponentVector zero() const { return ExponentVector(rank_); }
  ExponentVector add(const ExponentVector& x, const ExponentVector& y) const {
    return x + y;
  }
  bool eq(const ExponentVector& x, const ExponentVector& y) const {
    return x == y;
  }
  bool contains(const ExponentVector& x) const { return x.size() == rank_; }
  std::vector<ExponentVector> enumerate(std::size_t bound) const;
  bool enumeration_complete(std::size_t) const noexcept { return rank_ == 0; }
  std::string describe(const ExponentVector& x) const;

  std::optional<bool> decide_leq(const ExponentVector& x,
                                 const ExponentVector& y) const {
    return y.dominates(x);
  }
  std::optional<std::vector<ExponentVector>> summands(
      const ExponentVector& y) const;
  // x ∝ y iff the support of x lies inside the support of y.
  std::optional<bool> decide_propto(const ExponentVector& x,
                                    const ExponentVector& y) const;

 private:
  std::size_t rank_;
};

}  // namespace cones
