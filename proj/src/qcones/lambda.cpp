#include "cones/qcones/lambda.hpp"

#include <algorithm>

#include "cones/errors.hpp"

namespace cones {

NumberQSqrt2::NumberQSqrt2(Rational a, Rational b)
    : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

int NumberQSqrt2::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with 2 b^2 (never equal, sqrt 2 is
  // irrational)
  const Rational lhs = a_ * a_;
  const Rational rhs = 2 * b_ * b_;
  return lhs > rhs ? sa : sb;
}

std::string NumberQSqrt2::to_string() const {
  if (b_ == 0) return format_rational(a_);
  std::string root = (b_ == 1)    ? "sqrt2"
                     : (b_ == -1) ? "-sqrt2"
                                  : format_rational(b_) + "*sqrt2";
  if (a_ == 0) return root;
  if (b_ < 0) {
    const Rational mb = -b_;
    return format_rational(a_) + " - " +
           (mb == 1 ? std::string("sqrt2") : format_rational(mb) + "*sqrt2");
  }
  return format_rational(a_) + " + " + root;
}

NumberQSqrt2 sqrt2() { return {0, 1}; }

LowerSet::LowerSet(NumberQSqrt2 cut, bool closed)
    : cut_(std::move(cut)), closed_(closed) {
  if (cut_.sign() < 0) throw DomainError("lower set cut must be >= 0");
  if (!cut_.is_rational()) closed_ = false;
  if (cut_.sign() == 0 && !closed_) {
    throw DomainError("[0, 0) is empty");
  }
}

std::string LowerSet::to_string() const {
  return closed_ ? "[0, " + cut_.to_string() + "]"
                 : "[0, " + cut_.to_string() + ")";
}

std::vector<LowerSet> lower_sets_at(const NumberQSqrt2& cut) {
  std::vector<LowerSet> out;
  if (cut.sign() < 0) return out;
  if (cut.is_rational()) out.push_back(LowerSet::closed_at(cut));
  if (cut.sign() > 0) out.push_back(LowerSet::open_at(cut));
  return out;
}

LambdaWsdResult lambda_wsd_search(const LowerSet& a0, const LowerSet& a1,
                                  const LowerSet& b, const LowerSet& c) {
  LambdaWsdResult r;
  const LowerSet left = a0 + a1 + c;
  const LowerSet right = b + c;
  r.instance_holds = left == right;
  r.trace.push_back("a0 + a1 + c = " + left.to_string() + ", b + c = " +
                    right.to_string());
  if (!r.instance_holds) {
    throw PreconditionError("a0 + a1 + c != b + c");
  }
  const std::array<const LowerSet*, 2> a{&a0, &a1};
  std::array<std::vector<LowerSet>, 2> options;
  for (int i = 0; i < 2; ++i) {
    const std::string n = std::to_string(i);
    r.trace.push_back("x" + n + " + c = a" + n + " + c forces cut(x" + n +
                      ") = " + a[i]->cut().to_string());
    for (const auto& x : lower_sets_at(a[i]->cut())) {
      if (x + c == *a[i] + c) options[i].push_back(x);
    }
    std::string listed;
    for (const auto& x : options[i]) {
      listed += (listed.empty() ? "" : ", ") + x.to_string();
    }
    if (!a[i]->cut().is_rational()) {
      r.trace.push_back("cut " + a[i]->cut().to_string() +
                        " is irrational, so x" + n + " is open");
    }
    r.trace.push_back("candidates for x" + n + ": " + listed);
  }
  for (const auto& x0 : options[0]) {
    for (const auto& x1 : options[1]) {
      const LowerSet sum = x0 + x1;
      if (sum == b) {
        r.witness.emplace(x0, x1);
        r.trace.push_back("witness " + x0.to_string() + ", " + x1.to_string());
        return r;
      }
      r.trace.push_back(x0.to_string() + " + " + x1.to_string() + " = " +
                        sum.to_string() + " != b = " + b.to_string());
    }
  }
  if (b.closed()) {
    r.trace.push_back("b is closed but every candidate sum is open");
  }
  r.trace.push_back("no witness: (WSD) fails");
  return r;
}

LambdaWsdFailure lambda_wsd_failure() {
  const NumberQSqrt2 alpha = sqrt2() - NumberQSqrt2(1);
  const LowerSet a0 = LowerSet::open_at(alpha);
  const LowerSet a1 = LowerSet::open_at(NumberQSqrt2(1) - alpha);
  const LowerSet b = LowerSet::closed_at(NumberQSqrt2(1));
  const LowerSet c = LowerSet::open_at(NumberQSqrt2(1));
  return {a0, a1, b, c, lambda_wsd_search(a0, a1, b, c)};
}

std::optional<std::array<LowerSet, 4>> lambda_refinement(const LowerSet& a0,
                                                         const LowerSet& a1,
                                                         const LowerSet& b0,
                                                         const LowerSet& b1) {
  if (!(a0 + a1 == b0 + b1)) throw PreconditionError("a0 + a1 != b0 + b1");
  // c01 = a0 - c00, c10 = b0 - c00, c11 = a1 - b0 + c00, all >= 0
  const NumberQSqrt2 zero(0);
  const NumberQSqrt2 lo = std::max(zero, b0.cut() - a1.cut());
  const NumberQSqrt2 hi = std::min(a0.cut(), b0.cut());
  const NumberQSqrt2 mid(Rational(lo.a() + hi.a()) / 2,
                         Rational(lo.b() + hi.b()) / 2);
  for (const auto& c00 : {lo, hi, mid}) {
    const NumberQSqrt2 cuts[4] = {c00, a0.cut() - c00, b0.cut() - c00,
                                  a1.cut() - b0.cut() + c00};
    std::array<std::vector<LowerSet>, 4> sets;
    for (int i = 0; i < 4; ++i) sets[i] = lower_sets_at(cuts[i]);
    for (const auto& x00 : sets[0])
      for (const auto& x01 : sets[1])
        for (const auto& x10 : sets[2])
          for (const auto& x11 : sets[3]) {
            if (x00 + x01 == a0 && x10 + x11 == a1 && x00 + x10 == b0 &&
                x01 + x11 == b1) {
              return std::array<LowerSet, 4>{x00, x01, x10, x11};
            }
          }
  }
  return std::nullopt;
}

}  // namespace cones
