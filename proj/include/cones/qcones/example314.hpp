#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cones/qcones/rational_cone.hpp"

namespace cones {

// The numerical semigroup A generated by 2 and 7.
bool in_two_seven(const mpz_class& k);

// Submonoid of Q+ generated by (k/2)(9/2)^n for k in A, truncated to
// levels n <= n_max.  Generators are listed level by level as
// (2/2)(9/2)^n then (7/2)(9/2)^n, which generate every (k/2)(9/2)^n.
RationalCone example314_monoid(std::size_t n_max);

// d_n = (9/2)^n
Rational d(std::size_t n);

struct ClaimCheck {
  std::string label;  // e.g. "d_3", "2d_4 - 16d_1"
  Rational value;
  Membership membership;
  // Re-evaluating the certificate gives back the value (True cases), or
  // the exact search proved exhaustion (False cases).
  bool passed = false;
};

struct ClaimReport {
  std::string name;
  std::vector<ClaimCheck> checks;
  bool all_passed() const;
};

// d_n, d_{n+1} - d_n and 2d_{n+1} - 4d_n lie in M for every n <= n_max.
ClaimReport verify_claim1(std::size_t n_max);
// 2d_{n+k-1} - 2^k d_n lies in M for 1 <= k <= k_max and n <= n_max.
ClaimReport verify_claim2(std::size_t k_max, std::size_t n_max);
// d_m - 2 lies outside M for every m <= m_max.  Each level is decided
// exactly; members would have to use levels below m since every level-m
// generator already exceeds d_m - 2.
ClaimReport verify_nonmembership(std::size_t m_max);

// Replays the descent argument for d_m - 2 not in M: a representation
// would need its top level at m-1 with an odd coefficient below 9 taken
// from A, so equal to 7, which leaves a representation of d_{m-1} - 2.
// Each arithmetic fact used is checked exactly and logged.
struct DescentReplay {
  bool valid = true;
  std::vector<std::string> trace;
};
DescentReplay replay_nonmembership_argument(std::size_t m);

}  // namespace cones
