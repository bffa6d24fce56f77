#include "cones/cli/monoid_file.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace cones::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

bool is_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

struct Builder {
  std::string name;
  std::string kind;
  std::size_t start = 0;
  std::size_t dim = 0;
  // finite
  std::optional<std::vector<std::string>> elements;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> table;
  // presented
  std::optional<std::vector<std::string>> generators;
  std::vector<std::pair<std::string, std::size_t>> relation_text;
  // qcone
  std::vector<QVector> cone_generators;
};

MonoidDecl finish(Builder& b, std::size_t line) {
  if (b.kind == "finite") {
    if (!b.elements) throw ParseError(line, "finite monoid without elements");
    const std::size_t n = b.elements->size();
    std::vector<std::vector<FiniteMonoid::element_type>> rows(
        n, std::vector<FiniteMonoid::element_type>(n));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        auto it = b.table.find({x, y});
        if (it == b.table.end()) {
          throw ParseError(line, "table incomplete: missing add " +
                                     (*b.elements)[x] + " " +
                                     (*b.elements)[y]);
        }
        rows[x][y] = static_cast<FiniteMonoid::element_type>(it->second);
      }
    }
    try {
      return {b.name, FiniteMonoid(*b.elements, std::move(rows))};
    } catch (const PreconditionError& e) {
      throw ParseError(b.start, e.what());
    }
  }
  if (b.kind == "presented") {
    if (!b.generators) throw ParseError(line, "presentation without generators");
    std::vector<Relation> rels;
    Presentation bare;
    try {
      bare = Presentation(*b.generators, {});
    } catch (const PreconditionError& e) {
      throw ParseError(b.start, e.what());
    }
    for (const auto& [text, at] : b.relation_text) {
      const auto sides = split(text, '=');
      if (sides.size() != 2) throw ParseError(at, "relation needs one '='");
      try {
        rels.emplace_back(parse_word(bare, sides[0]), parse_word(bare, sides[1]));
      } catch (const DomainError& e) {
        throw ParseError(at, e.what());
      }
    }
    return {b.name, Presentation(*b.generators, std::move(rels))};
  }
  if (b.cone_generators.empty()) {
    throw ParseError(line, "cone without generators");
  }
  return {b.name, RationalCone(b.dim, std::move(b.cone_generators))};
}

}  // namespace

const MonoidDecl& MonoidFile::find(const std::string& name) const {
  for (const auto& d : decls) {
    if (d.name == name) return d;
  }
  throw DomainError("no monoid named '" + name + "'");
}

ExponentVector parse_word(const Presentation& p, const std::string& text) {
  ExponentVector w = p.word();
  const std::string t = trim(text);
  if (t == "0") return w;
  if (t.empty()) throw DomainError("empty word");
  for (const auto& term : split(t, '+')) {
    std::string coeff = "1", name = term;
    if (const auto star = term.find('*'); star != std::string::npos) {
      coeff = trim(term.substr(0, star));
      name = trim(term.substr(star + 1));
    }
    if (!is_digits(coeff)) throw DomainError("bad coefficient in '" + term + "'");
    const auto i = p.generator_index(name);
    if (!i) throw DomainError("unknown generator '" + name + "'");
    w[*i] += std::stoull(coeff);
  }
  return w;
}

FiniteMonoid::element_type parse_element(const FiniteMonoid& m,
                                         const std::string& text) {
  const auto x = m.find(trim(text));
  if (!x) throw DomainError("unknown element '" + text + "'");
  return *x;
}

ExponentVector parse_element(const Presentation& p, const std::string& text) {
  return parse_word(p, text);
}

QVector parse_element(const RationalCone& c, const std::string& text) {
  std::string t = trim(text);
  if (t.size() >= 2 && t.front() == '(' && t.back() == ')') {
    t = t.substr(1, t.size() - 2);
  }
  const auto parts = split(t, ',');
  if (parts.size() != c.dim()) {
    throw DomainError("expected " + std::to_string(c.dim()) + " entries in '" +
                      text + "'");
  }
  QVector v;
  for (const auto& s : parts) v.push_back(parse_rational(s));
  return v;
}

MonoidFile parse_monoid_file(const std::string& text) {
  MonoidFile file;
  std::optional<Builder> open;
  std::istringstream in(text);
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    const std::string line = raw.substr(0, raw.find('#'));
    const auto tok = tokens(line);
    if (tok.empty()) continue;
    const std::string& key = tok[0];
    if (key == "monoid") {
      if (open) throw ParseError(lineno, "missing 'end' before new monoid");
      if (tok.size() < 3) throw ParseError(lineno, "expected: monoid NAME KIND");
      Builder b;
      b.name = tok[1];
      b.kind = tok[2];
      b.start = lineno;
      for (const auto& d : file.decls) {
        if (d.name == b.name) throw ParseError(lineno, "duplicate monoid " + b.name);
      }
      if (b.kind == "finite" || b.kind == "presented") {
        if (tok.size() != 3) throw ParseError(lineno, "unexpected tokens after kind");
      } else if (b.kind == "qcone") {
        if (tok.size() != 4 || !is_digits(tok[3]) || tok[3] == "0") {
          throw ParseError(lineno, "expected: monoid NAME qcone DIM");
        }
        b.dim = std::stoul(tok[3]);
      } else {
        throw ParseError(lineno, "unknown kind '" + b.kind + "'");
      }
      open = std::move(b);
      continue;
    }
    if (!open) throw ParseError(lineno, "statement outside a monoid block");
    Builder& b = *open;
    if (key == "end") {
      if (tok.size() != 1) throw ParseError(lineno, "unexpected tokens after end");
      file.decls.push_back(finish(b, lineno));
      open.reset();
    } else if (key == "elements" && b.kind == "finite") {
      if (b.elements) throw ParseError(lineno, "elements given twice");
      if (tok.size() < 2) throw ParseError(lineno, "no elements listed");
      b.elements.emplace(tok.begin() + 1, tok.end());
    } else if (key == "add" && b.kind == "finite") {
      if (!b.elements) throw ParseError(lineno, "add before elements");
      if (tok.size() != 4) throw ParseError(lineno, "expected: add X Y Z");
      std::size_t idx[3];
      for (int i = 0; i < 3; ++i) {
        const auto& els = *b.elements;
        auto it = std::find(els.begin(), els.end(), tok[i + 1]);
        if (it == els.end()) {
          throw ParseError(lineno, "unknown element '" + tok[i + 1] + "'");
        }
        idx[i] = static_cast<std::size_t>(it - els.begin());
      }
      if (!b.table.emplace(std::make_pair(idx[0], idx[1]), idx[2]).second) {
        throw ParseError(lineno, "add " + tok[1] + " " + tok[2] + " given twice");
      }
      auto mirror = b.table.find({idx[1], idx[0]});
      if (mirror != b.table.end() && mirror->second != idx[2]) {
        throw ParseError(lineno, "table not commutative at " + tok[1] + ", " +
                                     tok[2]);
      }
    } else if (key == "generators" && b.kind == "presented") {
      if (b.generators) throw ParseError(lineno, "generators given twice");
      b.generators.emplace(tok.begin() + 1, tok.end());
    } else if (key == "relation" && b.kind == "presented") {
      if (!b.generators) throw ParseError(lineno, "relation before generators");
      const auto at = line.find("relation");
      b.relation_text.emplace_back(line.substr(at + 8), lineno);
    } else if (key == "generator" && b.kind == "qcone") {
      if (tok.size() != b.dim + 1) {
        throw ParseError(lineno, "expected " + std::to_string(b.dim) +
                                     " rationals");
      }
      QVector g;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        try {
          g.push_back(parse_rational(tok[i]));
        } catch (const DomainError& e) {
          throw ParseError(lineno, e.what());
        }
        if (g.back() < 0) throw ParseError(lineno, "negative generator entry");
      }
      b.cone_generators.push_back(std::move(g));
    } else {
      throw ParseError(lineno, "unknown keyword '" + key + "' in " + b.kind +
                                   " block");
    }
  }
  if (open) throw ParseError(lineno, "missing 'end' for monoid " + open->name);
  return file;
}

MonoidFile read_monoid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_monoid_file(text.str());
}

std::string print_decl(const MonoidDecl& decl) {
  std::ostringstream out;
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, FiniteMonoid>) {
          out << "monoid " << decl.name << " finite\n  elements";
          for (const auto& l : m.labels()) out << ' ' << l;
          out << '\n';
          for (FiniteMonoid::element_type x = 0; x < m.size(); ++x) {
            for (FiniteMonoid::element_type y = 0; y < m.size(); ++y) {
              out << "  add " << m.label(x) << ' ' << m.label(y) << ' '
                  << m.label(m.add(x, y)) << '\n';
            }
          }
        } else if constexpr (std::is_same_v<T, Presentation>) {
          out << "monoid " << decl.name << " presented\n  generators";
          for (const auto& g : m.generator_names()) out << ' ' << g;
          out << '\n';
          for (const auto& [l, r] : m.relations()) {
            out << "  relation " << m.format(l) << " = " << m.format(r) << '\n';
          }
        } else {
          out << "monoid " << decl.name << " qcone " << m.dim() << '\n';
          for (const auto& g : m.generators()) {
            out << "  generator";
            for (const auto& q : g) out << ' ' << format_rational(q);
            out << '\n';
          }
        }
      },
      decl.monoid);
  out << "end\n";
  return out.str();
}

std::string print_monoid_file(const MonoidFile& file) {
  std::string out;
  for (std::size_t i = 0; i < file.decls.size(); ++i) {
    if (i) out += '\n';
    out += print_decl(file.decls[i]);
  }
  return out;
}

}  // namespace cones::cli
