#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cones {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An element does not belong to the backend it was handed to.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An operation's documented precondition failed (e.g. a0+a1 != b0+b1).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A search hit its configured ceiling before it could conclude.
// Distinct from "no solution": the answer is simply not known.
class SearchCeilingExceeded : public Error {
 public:
  explicit SearchCeilingExceeded(std::size_t ceiling)
      : Error("search ceiling of " + std::to_string(ceiling) +
              " nodes exceeded"),
        ceiling_(ceiling) {}
  std::size_t ceiling() const noexcept { return ceiling_; }

 private:
  std::size_t ceiling_;
};

// A question that the backend cannot answer exactly (e.g. equality in a
// presented monoid whose completion was capped).
class UndecidableError : public Error {
 public:
  using Error::Error;
};

// Something the mathematics promises turned out false. Always a bug or a
// broken input, never a normal outcome.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace cones
