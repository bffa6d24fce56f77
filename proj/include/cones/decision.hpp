#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>

namespace cones {

enum class Truth { True, False, Unknown };

// Three-valued answer of a bounded check. Unknown remembers the bound that
// was exhausted; the witness is a human-readable certificate (a
// counterexample for False, a solution for existential True).
class Decision {
 public:
  static Decision yes(std::string witness = {}) {
    return Decision(Truth::True, 0, std::move(witness));
  }
  static Decision no(std::string witness = {}) {
    return Decision(Truth::False, 0, std::move(witness));
  }
  static Decision unknown(std::size_t bound, std::string note = {}) {
    return Decision(Truth::Unknown, bound, std::move(note));
  }
  static Decision from_bool(bool value) { return value ? yes() : no(); }

  Truth truth() const noexcept { return truth_; }
  bool is_true() const noexcept { return truth_ == Truth::True; }
  bool is_false() const noexcept { return truth_ == Truth::False; }
  bool is_unknown() const noexcept { return truth_ == Truth::Unknown; }
  std::size_t bound() const noexcept { return bound_; }
  const std::string& witness() const noexcept { return witness_; }

  Decision with_witness(std::string w) const {
    Decision d = *this;
    d.witness_ = std::move(w);
    return d;
  }

  std::string verdict() const {
    switch (truth_) {
      case Truth::True:
        return "True";
      case Truth::False:
        return "False";
      case Truth::Unknown:
        return "Unknown(" + std::to_string(bound_) + ")";
    }
    return "?";
  }

  friend bool operator==(const Decision& a, const Decision& b) {
    return a.truth_ == b.truth_ && a.bound_ == b.bound_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Decision& d) {
    os << d.verdict();
    if (!d.witness_.empty()) os << " [" << d.witness_ << "]";
    return os;
  }

 private:
  Decision(Truth t, std::size_t bound, std::string witness)
      : truth_(t), bound_(bound), witness_(std::move(witness)) {}

  Truth truth_;
  std::size_t bound_;
  std::string witness_;
};

// Conjunction over a universally quantified family: any False wins, then
// any Unknown, otherwise True.
class Conjunction {
 public:
  // Returns true once the outcome is settled (a False was seen).
  bool add(const Decision& d) {
    if (d.is_false()) {
      if (!failed_) {
        failed_ = true;
        witness_ = d.witness();
      }
      return true;
    }
    if (d.is_unknown() && !unknown_) {
      unknown_ = true;
      bound_ = d.bound();
      note_ = d.witness();
    }
    return false;
  }
  void fail(std::string witness) { add(Decision::no(std::move(witness))); }
  bool failed() const noexcept { return failed_; }

  Decision result() const {
    if (failed_) return Decision::no(witness_);
    if (unknown_) return Decision::unknown(bound_, note_);
    return Decision::yes();
  }

 private:
  bool failed_ = false;
  bool unknown_ = false;
  std::size_t bound_ = 0;
  std::string witness_;
  std::string note_;
};

}  // namespace cones
