#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "cones/errors.hpp"
#include "cones/finite/finite_monoid.hpp"
#include "cones/presentation/presentation.hpp"
#include "cones/qcones/rational_cone.hpp"

namespace cones::cli {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct MonoidDecl {
  std::string name;
  std::variant<FiniteMonoid, Presentation, RationalCone> monoid;
};

struct MonoidFile {
  std::vector<MonoidDecl> decls;
  const MonoidDecl& find(const std::string& name) const;
};

// Grammar, one statement per line, '#' to end of line is a comment:
//   monoid NAME finite        elements A B C / add X Y Z (all n² pairs)
//   monoid NAME presented     generators G H / relation WORD = WORD
//   monoid NAME qcone D       generator Q1 .. QD
//   end
MonoidFile parse_monoid_file(const std::string& text);
MonoidFile read_monoid_file(const std::string& path);

// Canonical text; parse(print(f)) == f.
std::string print_monoid_file(const MonoidFile& file);
std::string print_decl(const MonoidDecl& decl);

// "0", "g", "2*g + h" (spaces optional).
ExponentVector parse_word(const Presentation& p, const std::string& text);

// Element literals on the command line and in system files: a label for
// tables, a word for presentations, a rational or "(q1,..,qd)" for cones.
FiniteMonoid::element_type parse_element(const FiniteMonoid& m,
                                         const std::string& text);
ExponentVector parse_element(const Presentation& p, const std::string& text);
QVector parse_element(const RationalCone& c, const std::string& text);

}  // namespace cones::cli
