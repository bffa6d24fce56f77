#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace cones {

// A word in the free commutative monoid on n generators: one nonnegative
// exponent per generator.
class ExponentVector {
 public:
  using value_type = std::uint64_t;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : entries_(n, 0) {}
  ExponentVector(std::initializer_list<value_type> entries)
      : entries_(entries) {}
  explicit ExponentVector(std::vector<value_type> entries)
      : entries_(std::move(entries)) {}

  static ExponentVector unit(std::size_t n, std::size_t i) {
    ExponentVector v(n);
    v.entries_.at(i) = 1;
    return v;
  }

  std::size_t size() const noexcept { return entries_.size(); }
  value_type operator[](std::size_t i) const { return entries_[i]; }
  value_type& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<value_type>& entries() const noexcept { return entries_; }

  value_type degree() const noexcept;
  bool is_zero() const noexcept;

  // Componentwise >=.
  bool dominates(const ExponentVector& other) const;
  // Componentwise max.
  ExponentVector join(const ExponentVector& other) const;
  // Some generator occurs in both.
  bool overlaps(const ExponentVector& other) const;

  // Zero-padded copy of length n with this word placed at `offset`.
  ExponentVector embedded(std::size_t n, std::size_t offset) const;

  ExponentVector& operator+=(const ExponentVector& other);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) {
    a += b;
    return a;
  }
  // Requires this->dominates(other).
  ExponentVector& operator-=(const ExponentVector& other);
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) {
    a -= b;
    return a;
  }
  friend ExponentVector operator*(value_type k, ExponentVector v) {
    for (auto& e : v.entries_) e *= k;
    return v;
  }

  friend bool operator==(const ExponentVector&,
                         const ExponentVector&) = default;

 private:
  std::vector<value_type> entries_;
};

// Total degree first, then the first differing exponent (lower generator
// index decides; the larger exponent is larger).  A well-order compatible
// with addition.
bool graded_lex_less(const ExponentVector& a, const ExponentVector& b);

struct GradedLexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return graded_lex_less(a, b);
  }
};

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& v) const noexcept;
};

// "0" or "2*g + 1*h", generators in index order.
std::string format_word(const ExponentVector& w,
                        const std::vector<std::string>& names);

}  // namespace cones
