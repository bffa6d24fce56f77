#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cones/errors.hpp"

namespace cones {

// The contract every commutative monoid implementation satisfies.
//
// enumerate(bound) returns the zero element first and is deterministic.
// For finite backends it lists every element regardless of bound; otherwise
// it is a ball whose meaning (word length, coefficient sum) is the
// backend's.  enumeration_complete(bound) reports whether the returned list
// is the whole monoid.
template <class M>
concept MonoidBackend =
    requires(const M& m, const typename M::element_type& x,
             const typename M::element_type& y, std::size_t bound) {
      typename M::element_type;
      { m.zero() } -> std::convertible_to<typename M::element_type>;
      { m.add(x, y) } -> std::convertible_to<typename M::element_type>;
      { m.eq(x, y) } -> std::convertible_to<bool>;
      { m.contains(x) } -> std::convertible_to<bool>;
      {
        m.enumerate(bound)
      } -> std::convertible_to<std::vector<typename M::element_type>>;
      { m.enumeration_complete(bound) } -> std::convertible_to<bool>;
      { m.describe(x) } -> std::convertible_to<std::string>;
    };

// Optional hooks.  A backend that can decide the algebraic preorder
// exactly exposes decide_leq; one that can list every element below a
// given one exposes summands; one with an exact archimedean test exposes
// decide_propto.  A hook may return nullopt for inputs it cannot handle.
template <class M>
concept HasExactOrder =
    requires(const M& m, const typename M::element_type& x) {
      {
        m.decide_leq(x, x)
      } -> std::convertible_to<std::optional<bool>>;
    };

template <class M>
concept HasSummands = requires(const M& m, const typename M::element_type& x) {
  {
    m.summands(x)
  } -> std::convertible_to<std::optional<std::vector<typename M::element_type>>>;
};

template <class M>
concept HasExactPropto =
    requires(const M& m, const typename M::element_type& x) {
      {
        m.decide_propto(x, x)
      } -> std::convertible_to<std::optional<bool>>;
    };

template <MonoidBackend M>
using element_t = typename M::element_type;

// k·x by repeated doubling.
template <MonoidBackend M>
element_t<M> multiple(const M& m, std::size_t k, const element_t<M>& x) {
  element_t<M> result = m.zero();
  element_t<M> power = x;
  while (k > 0) {
    if (k & 1U) result = m.add(result, power);
    k >>= 1U;
    if (k > 0) power = m.add(power, power);
  }
  return result;
}

template <MonoidBackend M>
void require_element(const M& m, const element_t<M>& x, const char* what) {
  if (!m.contains(x)) {
    throw DomainError(std::string(what) + " is not an element of the monoid");
  }
}

template <MonoidBackend M>
bool is_zero(const M& m, const element_t<M>& x) {
  return m.eq(x, m.zero());
}

template <MonoidBackend M>
std::string describe_all(const M& m, const std::vector<element_t<M>>& xs) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ", ";
    os << m.describe(xs[i]);
  }
  os << ")";
  return os.str();
}

}  // namespace cones
