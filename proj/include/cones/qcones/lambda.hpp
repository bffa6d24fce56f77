#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cones/qcones/rational.hpp"

namespace cones {

// a + b*sqrt(2) with exact rational a, b.
class NumberQSqrt2 {
 public:
  NumberQSqrt2() = default;
  NumberQSqrt2(Rational a, Rational b = 0);

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  bool is_rational() const { return b_ == 0; }
  // -1, 0 or 1, decided exactly.
  int sign() const;

  friend NumberQSqrt2 operator+(const NumberQSqrt2& x, const NumberQSqrt2& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend NumberQSqrt2 operator-(const NumberQSqrt2& x, const NumberQSqrt2& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend bool operator==(const NumberQSqrt2& x, const NumberQSqrt2& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator<(const NumberQSqrt2& x, const NumberQSqrt2& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator<=(const NumberQSqrt2& x, const NumberQSqrt2& y) {
    return (x - y).sign() <= 0;
  }

  std::string to_string() const;

 private:
  Rational a_ = 0, b_ = 0;
};

NumberQSqrt2 sqrt2();

// A nonempty lower subset of Q+: [0, cut] when closed, [0, cut) when
// open.  Irrational cuts are always open and the cut 0 is always closed.
class LowerSet {
 public:
  LowerSet(NumberQSqrt2 cut, bool closed);
  static LowerSet closed_at(NumberQSqrt2 cut) { return {std::move(cut), true}; }
  static LowerSet open_at(NumberQSqrt2 cut) { return {std::move(cut), false}; }

  const NumberQSqrt2& cut() const noexcept { return cut_; }
  bool closed() const noexcept { return closed_; }

  // Pointwise sum of sets: cuts add, closed only when both are.
  friend LowerSet operator+(const LowerSet& x, const LowerSet& y) {
    return LowerSet(x.cut_ + y.cut_, x.closed_ && y.closed_);
  }
  friend bool operator==(const LowerSet& x, const LowerSet& y) {
    return x.cut_ == y.cut_ && x.closed_ == y.closed_;
  }
  // Inclusion, which is also the algebraic order.
  friend bool operator<=(const LowerSet& x, const LowerSet& y) {
    return x.cut_ < y.cut_ || (x.cut_ == y.cut_ && (!x.closed_ || y.closed_));
  }

  std::string to_string() const;

 private:
  NumberQSqrt2 cut_;
  bool closed_;
};

// Every LowerSet with the given cut (both flags when allowed).
std::vector<LowerSet> lower_sets_at(const NumberQSqrt2& cut);

struct LambdaWsdResult {
  bool instance_holds = false;  // a0 + a1 + c == b + c
  std::optional<std::pair<LowerSet, LowerSet>> witness;
  std::vector<std::string> trace;
};

// Exhaustive search for x0, x1 with a_i + c = x_i + c and x0 + x1 = b.
// Cuts cancel exactly, so only the flags of x_i are free.
LambdaWsdResult lambda_wsd_search(const LowerSet& a0, const LowerSet& a1,
                                  const LowerSet& b, const LowerSet& c);

struct LambdaWsdFailure {
  LowerSet a0, a1, b, c;
  LambdaWsdResult result;
};
// a0 = alpha, a1 = 1 - alpha (alpha = sqrt2 - 1), b = [0,1], c = [0,1).
LambdaWsdFailure lambda_wsd_failure();

// A refinement matrix for a0 + a1 = b0 + b1, trying c00 at both ends and
// the middle of its feasible interval under every flag assignment.
std::optional<std::array<LowerSet, 4>> lambda_refinement(const LowerSet& a0,
                                                         const LowerSet& a1,
                                                         const LowerSet& b0,
                                                         const LowerSet& b1);

}  // namespace cones
