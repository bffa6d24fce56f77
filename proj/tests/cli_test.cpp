#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cones/cli/commands.hpp"
#include "cones/cli/monoid_file.hpp"
#include "cones/presentation/presented_monoid.hpp"

using namespace cones;
using namespace cones::cli;

namespace {

const char* kCanonical =
    "monoid threechain finite\n"
    "  elements 0 1 inf\n"
    "  add 0 0 0\n"
    "  add 0 1 1\n"
    "  add 0 inf inf\n"
    "  add 1 0 1\n"
    "  add 1 1 inf\n"
    "  add 1 inf inf\n"
    "  add inf 0 inf\n"
    "  add inf 1 inf\n"
    "  add inf inf inf\n"
    "end\n"
    "\n"
    "monoid cyclic presented\n"
    "  generators g\n"
    "  relation 2*g = 3*g\n"
    "end\n"
    "\n"
    "monoid twosevens qcone 1\n"
    "  generator 2\n"
    "  generator 7\n"
    "end\n"
    "\n"
    "monoid plane qcone 2\n"
    "  generator 1 0\n"
    "  generator 1/2 1\n"
    "end\n";

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

struct Outcome {
  int code;
  std::string out, err;
};

Outcome cones_cmd(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t error_line(const std::string& text) {
  try {
    parse_monoid_file(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("print is a left inverse of parse on canonical files") {
  const auto file = parse_monoid_file(kCanonical);
  REQUIRE(file.decls.size() == 4);
  CHECK(print_monoid_file(file) == kCanonical);
  const std::string noisy =
      "# comment\nmonoid  A qcone 1   # trailing\n generator 4/2\n"
      "generator 7\nend\n";
  const auto a = parse_monoid_file(noisy);
  CHECK(print_monoid_file(parse_monoid_file(print_monoid_file(a))) ==
        print_monoid_file(a));
  CHECK(print_monoid_file(a) == "monoid A qcone 1\n  generator 2\n  generator 7\nend\n");
}

TEST_CASE("declarations build the expected monoids") {
  const auto file = parse_monoid_file(kCanonical);
  const auto& chain = std::get<FiniteMonoid>(file.find("threechain").monoid);
  CHECK(chain.add(chain.at("1"), chain.at("1")) == chain.at("inf"));

  const auto& p = std::get<Presentation>(file.find("cyclic").monoid);
  CHECK(p == Presentation({"g"}, {{ExponentVector{2}, ExponentVector{3}}}));
  // <g | 2g = 3g> has exactly the elements 0, g, 2g.
  const PresentedMonoid pm(p);
  CHECK(pm.enumerate(6).size() == 3);
  CHECK(pm.eq(ExponentVector{5}, ExponentVector{2}));

  const auto& c = std::get<RationalCone>(file.find("twosevens").monoid);
  CHECK(c.dim() == 1);
  CHECK(c.generators() == std::vector<QVector>{{Rational(2)}, {Rational(7)}});
  CHECK_THROWS_AS(file.find("missing"), DomainError);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_line("monoid A finite\n  elements 0 a\n  add 0 0 0\n"
                   "  add 0 a a\n  add a 0 a\nend\n") == 6);  // a + a missing
  CHECK(error_line("monoid A finite\n  elements 0 a b\n  add 0 0 0\n"
                   "  add 0 a a\n  add a 0 a\n  add 0 b b\n  add b 0 b\n"
                   "  add a a a\n  add a b a\n  add b a b\n") == 10);
  CHECK(error_line("\n\nmonoid Q qcone 1\n  generator 1/0\nend\n") == 4);
  CHECK(error_line("monoid Q qcone 1\n  generator 3/-2\nend\n") == 2);
  CHECK(error_line("monoid Q qcone 2\n  generator 1\nend\n") == 2);
  CHECK(error_line("monoid P presented\n  generators g\n  relation 2*h = g\nend\n") == 3);
  CHECK(error_line("monoid P presented\n  generators g\n  frobnicate\nend\n") == 3);
  CHECK(error_line("monoid P wobbly\nend\n") == 1);
  CHECK(error_line("monoid P presented\n  generators g\n") == 2);
  CHECK(error_line("end\n") == 1);
}

TEST_CASE("element literals") {
  const auto file = parse_monoid_file(kCanonical);
  const auto& p = std::get<Presentation>(file.find("cyclic").monoid);
  CHECK(parse_word(p, "0") == ExponentVector{0});
  CHECK(parse_word(p, "g + 2*g") == ExponentVector{3});
  CHECK_THROWS_AS(parse_word(p, "x"), DomainError);
  const auto& plane = std::get<RationalCone>(file.find("plane").monoid);
  CHECK(parse_element(plane, "(3/2,1)") == QVector{Rational(3, 2), Rational(1)});
  CHECK_THROWS_AS(parse_element(plane, "(1)"), DomainError);
}

TEST_CASE("command verdicts and exit codes") {
  const std::string f = write_temp("cones_cli_test.mon", kCanonical);

  SUBCASE("threechain is not a refinement monoid") {
    const auto r = cones_cmd({"check", f, "threechain", "refinement"});
    CHECK(r.code == kFailed);
    CHECK(r.out ==
          "check refinement [threechain]: False\n"
          "  witness: 1 + 1 = 1 + inf has no refinement matrix\n");
  }
  SUBCASE("<2,7> is not 2-unperforated") {
    const auto r =
        cones_cmd({"check", f, "twosevens", "p-unperforated", "--pset", "2"});
    CHECK(r.code == kFailed);
    CHECK(r.out.find("False") != std::string::npos);
    CHECK(r.out.find("witness: 2·2 <= 2·7 but 2 is not <= 7") !=
          std::string::npos);
  }
  SUBCASE("example314 passes") {
    const auto r = cones_cmd({"example314", "--max-m", "8"});
    CHECK(r.code == kOk);
    CHECK(r.out.find("False\n  witness") == std::string::npos);
  }
  SUBCASE("lambda-wsd passes") {
    const auto r = cones_cmd({"lambda-wsd"});
    CHECK(r.code == kOk);
    CHECK(r.out.find("no witness: (WSD) fails") != std::string::npos);
  }
  SUBCASE("bounded existential searches report Unknown") {
    const auto r =
        cones_cmd({"check", f, "plane", "quasi-divisible", "--bound", "2"});
    CHECK(r.code == kUnknown);
    CHECK(r.out.find("Unknown(2)") != std::string::npos);
  }
  SUBCASE("quotient prints a parseable table") {
    const auto r = cones_cmd({"quotient", f, "threechain", "separative"});
    CHECK(r.code == kOk);
    const auto block = r.out.substr(0, r.out.find("end\n") + 4);
    const auto q = parse_monoid_file(block);
    CHECK(std::get<FiniteMonoid>(q.decls.at(0).monoid).size() == 2);
  }
  SUBCASE("solve") {
    const std::string sys = write_temp(
        "cones_cli_test.sys",
        "unknowns x y\nequation 2*x + 2 = y + 7\nequation x + y = 16\n");
    const auto r = cones_cmd({"solve", f, "twosevens", sys});
    CHECK(r.code == kOk);
    CHECK(r.out.find("witness: x = 7, y = 9") != std::string::npos);
  }
  SUBCASE("steps") {
    CHECK(cones_cmd({"step", f, "threechain", "division", "inf", "3"}).code ==
          kOk);
    CHECK(cones_cmd({"step", f, "twosevens", "wsd", "2", "7", "9", "2"}).code ==
          kOk);
    CHECK(cones_cmd({"step", f, "cyclic", "refinement", "g", "g", "g", "g"})
              .code == kOk);
  }
  SUBCASE("usage and parse errors exit 2") {
    CHECK(cones_cmd({}).code == kUsage);
    CHECK(cones_cmd({"check", f, "threechain", "purple"}).code == kUsage);
    CHECK(cones_cmd({"check", f, "nosuch", "conical"}).code == kUsage);
    CHECK(cones_cmd({"check", f, "twosevens", "p-torsion-free"}).code == kUsage);
    CHECK(cones_cmd({"refine", f, "threechain", "1", "0", "0", "inf"}).code ==
          kUsage);
    CHECK(cones_cmd({"quotient", f, "twosevens", "separative"}).code == kUsage);
    const std::string bad = write_temp("cones_cli_bad.mon", "monoid A finite\n");
    const auto r = cones_cmd({"check", bad, "A", "conical"});
    CHECK(r.code == kUsage);
    CHECK(r.err.find("line 1") != std::string::npos);
  }
  SUBCASE("reports are byte-stable") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"corpus"},
          {"step", f, "twosevens", "wsd", "2", "7", "9", "2"},
          {"example314", "--max-m", "5"}}) {
      CHECK(cones_cmd(args).out == cones_cmd(args).out);
    }
  }
}
