#include "cones/qcones/example314.hpp"

#include "cones/errors.hpp"

namespace cones {

namespace {

Rational pow_q(const Rational& base, std::size_t n) {
  Rational out = 1;
  for (std::size_t i = 0; i < n; ++i) out *= base;
  return out;
}

mpz_class pow2(std::size_t k) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, k);
  return out;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

ClaimCheck check_member(const std::string& label, const Rational& value,
                        std::size_t levels) {
  const RationalCone m = example314_monoid(levels);
  ClaimCheck c{label, value, cone_membership(m, {value}), false};
  c.passed = c.membership.decision.is_true() && c.membership.certificate &&
             combination(m, *c.membership.certificate) == QVector{value};
  return c;
}

void require_passed(const ClaimReport& r) {
  for (const auto& c : r.checks) {
    if (!c.passed) {
      throw InvariantViolation(r.name + " fails at " + c.label + ": " +
                               c.membership.decision.verdict());
    }
  }
}

}  // namespace

bool in_two_seven(const mpz_class& k) {
  return k >= 0 && k != 1 && k != 3 && k != 5;
}

Rational d(std::size_t n) { return pow_q(Rational(9, 2), n); }

RationalCone example314_monoid(std::size_t n_max) {
  std::vector<QVector> gens;
  for (std::size_t n = 0; n <= n_max; ++n) {
    gens.push_back({d(n)});
    gens.push_back({Rational(7, 2) * d(n)});
  }
  return RationalCone(1, std::move(gens));
}

bool ClaimReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

ClaimReport verify_claim1(std::size_t n_max) {
  ClaimReport r{"claim1", {}};
  for (std::size_t n = 0; n <= n_max; ++n) {
    const std::string s = std::to_string(n);
    const std::string t = std::to_string(n + 1);
    r.checks.push_back(check_member("d_" + s, d(n), n + 1));
    r.checks.push_back(
        check_member("d_" + t + " - d_" + s, d(n + 1) - d(n), n + 1));
    r.checks.push_back(check_member("2d_" + t + " - 4d_" + s,
                                    2 * d(n + 1) - 4 * d(n), n + 1));
  }
  require_passed(r);
  return r;
}

ClaimReport verify_claim2(std::size_t k_max, std::size_t n_max) {
  ClaimReport r{"claim2", {}};
  for (std::size_t k = 1; k <= k_max; ++k) {
    for (std::size_t n = 0; n <= n_max; ++n) {
      const std::size_t top = n + k - 1;
      const Rational value = 2 * d(top) - Rational(pow2(k)) * d(n);
      r.checks.push_back(check_member("2d_" + std::to_string(top) + " - " +
                                          pow2(k).get_str() + "d_" +
                                          std::to_string(n),
                                      value, top));
    }
  }
  require_passed(r);
  return r;
}

ClaimReport verify_nonmembership(std::size_t m_max) {
  ClaimReport r{"nonmembership", {}};
  for (std::size_t m = 0; m <= m_max; ++m) {
    const Rational value = d(m) - 2;
    const RationalCone cone = example314_monoid(m);
    ClaimCheck c{"d_" + std::to_string(m) + " - 2", value,
                 cone_membership(cone, {value}), false};
    // every generator at a level above m exceeds the value too
    const bool higher_levels_too_big = value < d(m + 1);
    c.passed = c.membership.decision.is_false() && higher_levels_too_big;
    if (c.membership.decision.is_true()) {
      throw InvariantViolation("d_" + std::to_string(m) + " - 2 has " +
                               c.membership.decision.witness());
    }
    r.checks.push_back(std::move(c));
  }
  require_passed(r);
  return r;
}

DescentReplay replay_nonmembership_argument(std::size_t m) {
  DescentReplay out;
  auto fact = [&](bool holds, const std::string& text) {
    out.trace.push_back((holds ? "ok   " : "FAIL ") + text);
    out.valid = out.valid && holds;
  };
  for (std::size_t level = m; level > 0; --level) {
    const std::string L = std::to_string(level);
    const std::string N = std::to_string(level - 1);
    const Rational value = d(level) - 2;
    fact(value < d(level), "top level n of a representation of d_" + L +
                               " - 2 satisfies d_n <= d_" + L +
                               " - 2 < d_" + L + ", so n < " + L);
    fact(!is_integer(Rational(pow2(level - 1)) * value),
         "2^" + N + "(d_" + L + " - 2) is not an integer, so n + 1 >= " + L +
             ", so n = " + N + " and k_n is odd");
    fact(Rational(9, 2) * d(level - 1) > value,
         "k_n >= 9 would give at least d_" + L + " > d_" + L + " - 2");
    bool only_seven = true;
    for (int k = 1; k < 9; k += 2) {
      only_seven = only_seven && (in_two_seven(k) == (k == 7));
    }
    fact(only_seven, "the only odd element of A below 9 is 7");
    fact(Rational(7, 2) * d(level - 1) == d(level) - d(level - 1),
         "(7/2)d_" + N + " = d_" + L + " - d_" + N +
             ", leaving a representation of d_" + N + " - 2");
  }
  fact(d(0) - 2 < 0, "d_0 - 2 = -1 is negative, so it has no representation");
  return out;
}

}  // namespace cones
