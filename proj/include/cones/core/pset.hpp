#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cones {

// A multiplicative subsemigroup of the positive integers, given by
// generators.  Every generator is at least 2.
class PSet {
 public:
  explicit PSet(std::vector<std::uint32_t> generators);

  const std::vector<std::uint32_t>& generators() const noexcept {
    return generators_;
  }

  // All members of the semigroup that are <= limit, ascending.
  std::vector<std::uint64_t> members_up_to(std::uint64_t limit) const;

  bool contains(std::uint64_t p) const;

  std::string to_string() const;

 private:
  std::vector<std::uint32_t> generators_;
};

}  // namespace cones
