#include "cones/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "cones/cli/monoid_file.hpp"
#include "cones/core/equations.hpp"
#include "cones/core/predicates.hpp"
#include "cones/errors.hpp"
#include "cones/extensions/division.hpp"
#include "cones/extensions/wsd.hpp"
#include "cones/finite/congruence.hpp"
#include "cones/finite/sweep.hpp"
#include "cones/presentation/constructions.hpp"
#include "cones/presentation/presented_monoid.hpp"
#include "cones/qcones/example314.hpp"
#include "cones/qcones/lambda.hpp"

namespace cones::cli {

void Report::note(std::string line) {
  Entry e;
  e.text = std::move(line);
  entries_.push_back(std::move(e));
}

void Report::check(std::string name, std::string subject, Decision verdict,
                   double seconds) {
  Entry e;
  e.is_check = true;
  e.text = std::move(name);
  e.subject = std::move(subject);
  e.verdict = std::move(verdict);
  e.seconds = seconds;
  entries_.push_back(std::move(e));
}

int Report::exit_code() const {
  bool unknown = false;
  for (const auto& e : entries_) {
    if (!e.is_check) continue;
    if (e.verdict.is_false()) return kFailed;
    unknown = unknown || e.verdict.is_unknown();
  }
  return unknown ? kUnknown : kOk;
}

void Report::print(std::ostream& out, bool timing) const {
  for (const auto& e : entries_) {
    if (!e.is_check) {
      out << e.text << '\n';
      continue;
    }
    out << "check " << e.text << " [" << e.subject
        << "]: " << e.verdict.verdict() << '\n';
    if (!e.verdict.witness().empty()) {
      out << "  witness: " << e.verdict.witness() << '\n';
    }
    if (timing) {
      std::ostringstream t;
      t << std::fixed << std::setprecision(3) << e.seconds;
      out << "  time: " << t.str() << "s\n";
    }
  }
}

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

class UsageError : public Error {
 public:
  using Error::Error;
};

// One backend per declaration kind.
template <class F>
void with_backend(const MonoidDecl& decl, F&& f) {
  if (const auto* m = std::get_if<FiniteMonoid>(&decl.monoid)) {
    f(*m);
  } else if (const auto* p = std::get_if<Presentation>(&decl.monoid)) {
    f(PresentedMonoid(*p));
  } else {
    f(std::get<RationalCone>(decl.monoid));
  }
}

FiniteMonoid::element_type element_in(const FiniteMonoid& m,
                                      const std::string& s) {
  return parse_element(m, s);
}
ExponentVector element_in(const PresentedMonoid& m, const std::string& s) {
  return parse_element(m.presentation(), s);
}
QVector element_in(const RationalCone& c, const std::string& s) {
  return parse_element(c, s);
}

PSet parse_pset(const std::string& text) {
  std::vector<std::uint32_t> gens;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty() ||
        item.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("bad --pset entry '" + item + "'");
    }
    gens.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  if (gens.empty()) throw UsageError("--pset is empty");
  try {
    return PSet(std::move(gens));
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
}

const std::vector<std::string> kPredicates = {
    "conical",         "cancellative",  "separative",     "stably-finite",
    "antisymmetric",   "simple",        "refinement",     "quasi-divisible",
    "p-torsion-free",  "p-unperforated"};

template <class M>
Decision predicate(const M& m, const std::string& name, std::size_t bound,
                   const std::optional<PSet>& pset) {
  if (name == "conical") return is_conical(m, bound);
  if (name == "cancellative") return is_cancellative(m, bound);
  if (name == "separative") return is_separative(m, bound);
  if (name == "stably-finite") return is_stably_finite(m, bound);
  if (name == "antisymmetric") return is_antisymmetric(m, bound);
  if (name == "simple") return is_simple(m, bound);
  if (name == "refinement") return is_refinement(m, bound);
  if (name == "quasi-divisible") return is_quasi_divisible(m, bound);
  if (!pset) throw UsageError(name + " needs --pset");
  if (name == "p-torsion-free") return is_p_torsion_free(m, *pset, bound);
  return is_p_unperforated(m, *pset, bound);
}

// "unknowns x y" then lines "equation LHS = RHS"; a term is "k*name" or
// "name", where names that are not unknowns are element literals.
template <MonoidBackend M>
EquationSystem<element_t<M>> parse_system(const M& m, const std::string& text,
                                          std::vector<std::string>& unknowns) {
  using E = element_t<M>;
  std::vector<std::pair<std::string, std::size_t>> lines;
  std::istringstream in(text);
  std::size_t lineno = 0;
  bool declared = false;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream words(line);
    std::string key;
    if (!(words >> key)) continue;
    if (key == "unknowns") {
      if (declared) throw ParseError(lineno, "unknowns given twice");
      declared = true;
      for (std::string u; words >> u;) unknowns.push_back(u);
      if (unknowns.empty()) throw ParseError(lineno, "no unknowns listed");
    } else if (key == "equation") {
      if (!declared) throw ParseError(lineno, "equation before unknowns");
      lines.emplace_back(line.substr(line.find("equation") + 8), lineno);
    } else {
      throw ParseError(lineno, "unknown keyword '" + key + "'");
    }
  }
  if (!declared) throw ParseError(lineno, "missing unknowns line");

  auto side = [&](const std::string& s, std::size_t at,
                  std::vector<std::size_t>& coeffs, E& constant) {
    coeffs.assign(unknowns.size(), 0);
    constant = m.zero();
    std::stringstream terms(s);
    for (std::string term; std::getline(terms, term, '+');) {
      term.erase(0, term.find_first_not_of(" \t"));
      term.erase(term.find_last_not_of(" \t\r") + 1);
      if (term.empty()) throw ParseError(at, "empty term");
      std::size_t k = 1;
      std::string name = term;
      const auto star = term.find('*');
      if (star != std::string::npos) {
        std::string lead = term.substr(0, star);
        lead.erase(lead.find_last_not_of(" \t") + 1);
        if (!lead.empty() &&
            lead.find_first_not_of("0123456789") == std::string::npos) {
          k = std::stoul(lead);
          name = term.substr(star + 1);
          name.erase(0, name.find_first_not_of(" \t"));
        }
      }
      const auto it = std::find(unknowns.begin(), unknowns.end(), name);
      if (it != unknowns.end()) {
        coeffs[static_cast<std::size_t>(it - unknowns.begin())] += k;
        continue;
      }
      try {
        constant = m.add(constant, multiple(m, k, element_in(m, name)));
      } catch (const DomainError& e) {
        throw ParseError(at, e.what());
      }
    }
  };

  std::vector<Equation<E>> eqs;
  for (const auto& [body, at] : lines) {
    const auto eq_pos = body.find('=');
    if (eq_pos == std::string::npos || body.find('=', eq_pos + 1) != std::string::npos) {
      throw ParseError(at, "equation needs one '='");
    }
    Equation<E> eq{{}, m.zero(), {}, m.zero()};
    side(body.substr(0, eq_pos), at, eq.left, eq.left_const);
    side(body.substr(eq_pos + 1), at, eq.right, eq.right_const);
    eqs.push_back(std::move(eq));
  }
  return EquationSystem<E>(unknowns.size(), std::move(eqs));
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

template <class M>
std::string describe_matrix(const M& m,
                            const RefinementMatrix<element_t<M>>& c) {
  return "c00 = " + m.describe(c.c00) + ", c01 = " + m.describe(c.c01) +
         ", c10 = " + m.describe(c.c10) + ", c11 = " + m.describe(c.c11);
}

// ---- commands --------------------------------------------------------

struct Args {
  std::string file, name, pred, sysfile, kind, step;
  std::vector<std::string> rest;
  std::size_t bound = 5;
  std::string pset;
  std::size_t max_m = 8, max_k = 6, max_n = 4, claim1_n = 6;
};

void cmd_check(const Args& a, Report& r) {
  const auto file = read_monoid_file(a.file);
  const auto& decl = file.find(a.name);
  std::optional<PSet> pset;
  if (!a.pset.empty()) pset = parse_pset(a.pset);
  with_backend(decl, [&](const auto& m) {
    Stopwatch w;
    Decision d = predicate(m, a.pred, a.bound, pset);
    std::string check = a.pred;
    if (pset) check += " " + pset->to_string();
    r.check(check, a.name, d, w.seconds());
  });
}

void cmd_refine(const Args& a, Report& r) {
  if (a.rest.size() != 4) throw UsageError("refine needs a0 a1 b0 b1");
  const auto file = read_monoid_file(a.file);
  with_backend(file.find(a.name), [&](const auto& m) {
    const auto a0 = element_in(m, a.rest[0]), a1 = element_in(m, a.rest[1]);
    const auto b0 = element_in(m, a.rest[2]), b1 = element_in(m, a.rest[3]);
    Stopwatch w;
    const auto found = refinement_search(m, a0, a1, b0, b1, a.bound);
    Decision d = found.matrix ? Decision::yes(describe_matrix(m, *found.matrix))
                 : found.exhaustive
                     ? Decision::no("no matrix exists")
                     : Decision::unknown(a.bound, "no matrix in the ball");
    r.check("refinement matrix", a.name, d, w.seconds());
  });
}

void cmd_solve(const Args& a, Report& r) {
  const auto file = read_monoid_file(a.file);
  const std::string text = read_text(a.sysfile);
  with_backend(file.find(a.name), [&](const auto& m) {
    std::vector<std::string> unknowns;
    const auto system = parse_system(m, text, unknowns);
    Stopwatch w;
    const auto out = solve_system(m, system, a.bound);
    Decision d = Decision::unknown(a.bound, "no solution in the ball");
    if (out.assignment) {
      std::string s;
      for (std::size_t i = 0; i < unknowns.size(); ++i) {
        if (i) s += ", ";
        s += unknowns[i] + " = " + m.describe((*out.assignment)[i]);
      }
      d = Decision::yes(s);
    } else if (out.exhaustive) {
      d = Decision::no("no solution exists");
    }
    r.check("solvable", a.name, d, w.seconds());
  });
}

void cmd_quotient(const Args& a, Report& r) {
  const auto file = read_monoid_file(a.file);
  const auto* m = std::get_if<FiniteMonoid>(&file.find(a.name).monoid);
  if (!m) throw UsageError("quotient needs a finite monoid");
  Stopwatch w;
  std::optional<Quotient> q;
  Decision has = Decision::yes();
  if (a.kind == "cancellative") {
    q = cancellative_quotient(*m);
    has = is_cancellative(q->monoid, 0);
  } else if (a.kind == "separative") {
    q = separative_quotient(*m);
    has = is_separative(q->monoid, 0);
  } else if (a.kind == "torsion") {
    const PSet p = parse_pset(a.pset.empty() ? "2" : a.pset);
    q = p_torsion_quotient(*m, p);
    has = is_p_torsion_free(q->monoid, p, 0);
  } else {
    q = antisymmetric_quotient(*m);
    has = is_antisymmetric(q->monoid, 0);
  }
  const double secs = w.seconds();
  std::string block = print_decl({a.name + "_" + a.kind, q->monoid});
  block.pop_back();
  r.note(block);
  r.check("quotient is " + a.kind, a.name, has, secs);
  r.check("projection is a homomorphism", a.name,
          Decision::from_bool(projection_is_homomorphism(*m, *q)));
}

void step_refinement(const Args& a, const MonoidDecl& decl, Report& r) {
  if (a.rest.size() != 4) throw UsageError("step refinement needs a0 a1 b0 b1");
  Stopwatch w;
  RefinementStep s;
  std::string m_name;
  if (const auto* m = std::get_if<FiniteMonoid>(&decl.monoid)) {
    s = refinement_step(*m, element_in(*m, a.rest[0]), element_in(*m, a.rest[1]),
                        element_in(*m, a.rest[2]), element_in(*m, a.rest[3]),
                        a.bound);
  } else if (const auto* p = std::get_if<Presentation>(&decl.monoid)) {
    s = refinement_step(*p, parse_word(*p, a.rest[0]), parse_word(*p, a.rest[1]),
                        parse_word(*p, a.rest[2]), parse_word(*p, a.rest[3]),
                        a.bound);
  } else {
    throw UsageError("step refinement needs a finite or presented monoid");
  }
  const double secs = w.seconds();
  if (s.degenerate) {
    r.note("degenerate instance: the matrix lies in " + a.name);
  } else {
    std::string block =
        print_decl({a.name + "_refined", s.extension->presentation()});
    block.pop_back();
    r.note(block);
    const auto& np = s.extension->presentation();
    r.note("matrix: c00 = " + np.format(s.matrix.c00) + ", c01 = " +
           np.format(s.matrix.c01) + ", c10 = " + np.format(s.matrix.c10) +
           ", c11 = " + np.format(s.matrix.c11));
  }
  r.check("refinement matrix", a.name, s.matrix_valid, secs);
  r.check("injective on ball " + std::to_string(s.bound), a.name,
          s.injective_on_ball);
  r.check("conical on ball " + std::to_string(s.bound), a.name,
          s.conical_on_ball);
  r.check("unitary", a.name, s.unitary);
  r.note("strongly unitary (not asserted): " + s.strongly_unitary.verdict());
}

void step_division(const Args& a, const MonoidDecl& decl, Report& r) {
  if (a.rest.size() != 2) throw UsageError("step division needs a p");
  const std::string& ptext = a.rest[1];
  if (ptext.empty() || ptext.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError("p must be a positive integer");
  }
  const std::uint64_t p = std::stoull(ptext);
  with_backend(decl, [&](const auto& m) {
    const auto av = element_in(m, a.rest[0]);
    Stopwatch w;
    const auto n = division_extend(m, av, p);
    const auto rep = check_division_extension(n, a.bound);
    const double secs = w.seconds();
    r.note("extension: " + a.name + " plus u with " + std::to_string(p) +
           "*u = " + m.describe(av));
    r.note("elements (x, k) stand for x + k*u; (x,k) ~ (y,l) iff k = l mod " +
           std::to_string(p) + " and x + ceil(k/" + std::to_string(p) + ")*a = y + ceil(l/" +
           std::to_string(p) + ")*a");
    r.check("j injective", a.name, rep.j_injective, secs);
    r.check("p*u = j(a)", a.name, rep.p_u_is_a);
    r.check("(x,1) ~ (y,1) iff x + a = y + a", a.name, rep.shifted_equality);
    r.check("unitary", a.name, rep.unitary);
    r.check("conical", a.name, rep.conical);
    r.note("strongly unitary (not asserted): " +
           rep.strongly_unitary.verdict());
  });
}

void step_wsd(const Args& a, const MonoidDecl& decl, Report& r) {
  if (a.rest.size() != 4) throw UsageError("step wsd needs a0 a1 b c");
  with_backend(decl, [&](const auto& m) {
    const auto a0 = element_in(m, a.rest[0]), a1 = element_in(m, a.rest[1]);
    const auto b = element_in(m, a.rest[2]), c = element_in(m, a.rest[3]);
    Stopwatch w;
    const auto n = wsd_extend(m, a0, a1, b, c);
    const auto rep = check_wsd_extension(n, a.bound);
    const double secs = w.seconds();
    r.note("extension: " + a.name + " plus e0, e1 with e0 + e1 -> b and "
           "e_i -> a_i above c");
    r.check("witness solves the instance", a.name, rep.solves_instance, secs);
    r.check("j injective", a.name, rep.j_injective);
    r.check("j order embedding", a.name, rep.j_order_embedding);
    r.check("(c, e0 + e1) joins", a.name, rep.case2_peak);
    r.check("conical", a.name, rep.conical);
    Stopwatch w2;
    const auto sample = sample_local_confluence(n, a.bound, 4, 2000, 1);
    const std::string summary = std::to_string(sample.peaks) + " peaks, " +
                                std::to_string(sample.failures) + " failures";
    r.check("local confluence", a.name,
            sample.failures == 0
                ? Decision::yes(summary)
                : Decision::no(summary + ", first at " + sample.first_failure),
            w2.seconds());
  });
}

void cmd_step(const Args& a, Report& r) {
  const auto file = read_monoid_file(a.file);
  const auto& decl = file.find(a.name);
  if (a.step == "refinement") {
    step_refinement(a, decl, r);
  } else if (a.step == "division") {
    step_division(a, decl, r);
  } else {
    step_wsd(a, decl, r);
  }
}

void claim_lines(const ClaimReport& c, Report& r) {
  for (const auto& k : c.checks) {
    std::string line = "  " + k.label + " = " + format_rational(k.value) +
                       ": " + k.membership.decision.verdict();
    if (const auto& cert = k.membership.certificate; cert && !cert->empty()) {
      // Two generators per level, so the level count is recoverable.
      line += " = " + format_certificate(example314_monoid(cert->size() / 2 - 1),
                                         *cert);
    }
    r.note(line);
  }
}

Decision claim_verdict(const std::function<ClaimReport()>& f, Report& r,
                       std::string& name) {
  try {
    const ClaimReport c = f();
    name = c.name;
    claim_lines(c, r);
    return Decision::from_bool(c.all_passed())
        .with_witness(std::to_string(c.checks.size()) + " values");
  } catch (const InvariantViolation& e) {
    return Decision::no(e.what());
  }
}

void cmd_example314(const Args& a, Report& r) {
  struct Part {
    std::string title;
    std::function<ClaimReport()> run;
  };
  const Part parts[] = {
      {"claim 1 (n <= " + std::to_string(a.claim1_n) + ")",
       [&] { return verify_claim1(a.claim1_n); }},
      {"claim 2 (k <= " + std::to_string(a.max_k) +
           ", n <= " + std::to_string(a.max_n) + ")",
       [&] { return verify_claim2(a.max_k, a.max_n); }},
      {"d_m - 2 outside M (m <= " + std::to_string(a.max_m) + ")",
       [&] { return verify_nonmembership(a.max_m); }},
  };
  for (const auto& part : parts) {
    r.note(part.title);
    Stopwatch w;
    std::string name;
    const Decision d = claim_verdict(part.run, r, name);
    r.check(part.title, "example314", d, w.seconds());
  }
  Stopwatch w;
  const auto replay = replay_nonmembership_argument(a.max_m);
  r.note("descent argument for d_" + std::to_string(a.max_m) + " - 2");
  for (const auto& line : replay.trace) r.note("  " + line);
  r.check("descent argument", "example314", Decision::from_bool(replay.valid),
          w.seconds());
}

void cmd_lambda(Report& r) {
  Stopwatch w;
  const auto f = lambda_wsd_failure();
  r.note("a0 = " + f.a0.to_string());
  r.note("a1 = " + f.a1.to_string());
  r.note("b  = " + f.b.to_string());
  r.note("c  = " + f.c.to_string());
  for (const auto& line : f.result.trace) r.note("  " + line);
  const double secs = w.seconds();
  r.check("a0 + a1 + c = b + c", "lambda", Decision::from_bool(f.result.instance_holds),
          secs);
  r.check("no WSD witness", "lambda",
          f.result.witness
              ? Decision::no("x0 = " + f.result.witness->first.to_string() +
                             ", x1 = " + f.result.witness->second.to_string())
              : Decision::yes());
}

void cmd_corpus(Report& r) {
  Stopwatch w;
  const auto entries = corpus_sweep();
  const double secs = w.seconds();
  bool first = true;
  for (const auto& e : entries) {
    for (const auto& c : e.checks) {
      r.check(c.name, e.monoid, c.verdict, first ? secs : 0);
      first = false;
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Bounded checks for commutative monoids and cones", "cones"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "Print elapsed time per check");
  Args a;

  auto* check = app.add_subcommand("check", "Test a predicate on a monoid");
  check->add_option("file", a.file)->required();
  check->add_option("name", a.name)->required();
  check->add_option("pred", a.pred)
      ->required()
      ->check(CLI::IsMember(kPredicates));
  check->add_option("--bound", a.bound, "Enumeration ball")->capture_default_str();
  check->add_option("--pset", a.pset, "Comma-separated generators of P");

  auto* refine = app.add_subcommand("refine", "Find a refinement matrix");
  refine->add_option("file", a.file)->required();
  refine->add_option("name", a.name)->required();
  refine->add_option("entries", a.rest, "a0 a1 b0 b1")->required()->expected(4);
  refine->add_option("--bound", a.bound)->capture_default_str();

  auto* solve = app.add_subcommand("solve", "Solve a system of equations");
  solve->add_option("file", a.file)->required();
  solve->add_option("name", a.name)->required();
  solve->add_option("system", a.sysfile)->required();
  solve->add_option("--bound", a.bound)->capture_default_str();

  auto* quotient = app.add_subcommand("quotient", "Canonical quotient table");
  quotient->add_option("file", a.file)->required();
  quotient->add_option("name", a.name)->required();
  quotient->add_option("kind", a.kind)
      ->required()
      ->check(CLI::IsMember(
          {"cancellative", "separative", "torsion", "antisymmetric"}));
  quotient->add_option("--pset", a.pset);

  auto* step = app.add_subcommand("step", "One embedding step");
  step->add_option("file", a.file)->required();
  step->add_option("name", a.name)->required();
  step->add_option("kind", a.step)
      ->required()
      ->check(CLI::IsMember({"refinement", "division", "wsd"}));
  step->add_option("args", a.rest)->required();
  step->add_option("--bound", a.bound)->capture_default_str();

  auto* ex = app.add_subcommand("example314", "Verify the Q+ example");
  ex->add_option("--max-m", a.max_m)->capture_default_str();
  ex->add_option("--max-k", a.max_k)->capture_default_str();
  ex->add_option("--max-n", a.max_n)->capture_default_str();
  ex->add_option("--claim1-max-n", a.claim1_n)->capture_default_str();

  auto* lambda = app.add_subcommand("lambda-wsd", "Lower-set counterexample");
  auto* corpus = app.add_subcommand("corpus", "Invariant sweep over tables");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  Report report;
  try {
    if (check->parsed()) {
      cmd_check(a, report);
    } else if (refine->parsed()) {
      cmd_refine(a, report);
    } else if (solve->parsed()) {
      cmd_solve(a, report);
    } else if (quotient->parsed()) {
      cmd_quotient(a, report);
    } else if (step->parsed()) {
      cmd_step(a, report);
    } else if (ex->parsed()) {
      cmd_example314(a, report);
    } else if (lambda->parsed()) {
      cmd_lambda(report);
    } else if (corpus->parsed()) {
      cmd_corpus(report);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UndecidableError& e) {
    report.print(out, timing);
    out << "undecided: " << e.what() << '\n';
    return kUnknown;
  } catch (const SearchCeilingExceeded& e) {
    report.print(out, timing);
    out << "undecided: " << e.what() << '\n';
    return kUnknown;
  } catch (const InvariantViolation& e) {
    report.print(out, timing);
    out << "invariant violated: " << e.what() << '\n';
    return kFailed;
  }
  report.print(out, timing);
  return report.exit_code();
}

}  // namespace cones::cli
