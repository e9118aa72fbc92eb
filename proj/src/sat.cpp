#include "cayley/sat.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "cayley/error.hpp"

namespace cayley {

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula f;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  Clause current;
  std::size_t line_no = 0;
  std::size_t last_line = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const char lead = line[first];
    if (lead == 'c') continue;
    if (lead == '%') break;
    std::istringstream tokens(line);
    if (lead == 'p') {
      if (have_header) throw ParseError(line_no, "duplicate header");
      std::string p, fmt, extra;
      long long vars = -1, clauses = -1;
      if (!(tokens >> p >> fmt >> vars >> clauses) || p != "p" || fmt != "cnf" || vars < 0 ||
          clauses < 0 || (tokens >> extra)) {
        throw ParseError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
      }
      have_header = true;
      f.num_variables = static_cast<std::size_t>(vars);
      declared_clauses = static_cast<std::size_t>(clauses);
      continue;
    }
    if (!have_header) throw ParseError(line_no, "clause before 'p cnf' header");
    std::string tok;
    while (tokens >> tok) {
      long long lit = 0;
      std::size_t used = 0;
      try {
        lit = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw ParseError(line_no, "invalid literal '" + tok + "'");
      if (lit == 0) {
        f.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      const auto var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
      if (var > f.num_variables) {
        throw ParseError(line_no, "literal " + tok + " out of range (" +
                                      std::to_string(f.num_variables) + " variables)");
      }
      current.push_back({static_cast<std::uint32_t>(var), lit < 0});
      last_line = line_no;
    }
  }
  if (!have_header) throw ParseError(line_no, "missing 'p cnf' header");
  if (!current.empty()) throw ParseError(last_line, "missing clause terminator 0");
  if (f.clauses.size() != declared_clauses) {
    throw ParseError(line_no, "header declares " + std::to_string(declared_clauses) +
                                  " clauses, found " + std::to_string(f.clauses.size()));
  }
  return f;
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

NormalizedFormula normalize_3sat(const CnfFormula& f) {
  NormalizedFormula out;
  out.formula.num_variables = f.num_variables;
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    Clause clause;
    bool tautology = false;
    for (const auto& lit : f.clauses[c]) {
      if (std::find(clause.begin(), clause.end(), lit) != clause.end()) continue;
      if (std::find(clause.begin(), clause.end(), !lit) != clause.end()) tautology = true;
      clause.push_back(lit);
    }
    if (tautology) {
      ++out.tautologies_removed;
      continue;
    }
    if (clause.empty()) throw ValidationError("clause " + std::to_string(c + 1) + " is empty");
    if (clause.size() > 3) {
      throw ValidationError("clause " + std::to_string(c + 1) + " has " +
                            std::to_string(clause.size()) + " literals, 3-SAT allows at most 3");
    }
    out.formula.clauses.push_back(std::move(clause));
  }
  return out;
}

bool evaluate(const CnfFormula& f, const Assignment& a) {
  return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& clause) {
    return std::any_of(clause.begin(), clause.end(),
                       [&](const Literal& l) { return a.at(l.variable - 1) != l.negated; });
  });
}

std::uint64_t count_satisfying(const CnfFormula& f, std::size_t max_vars) {
  if (f.num_variables > max_vars) {
    throw CapExceeded("model counting over " + std::to_string(f.num_variables) +
                      " variables exceeds cap " + std::to_string(max_vars));
  }
  if (f.num_variables > 63) throw CapExceeded("model counting limited to 63 variables");
  struct Masks {
    std::uint64_t positive = 0;
    std::uint64_t negative = 0;
  };
  std::vector<Masks> masks;
  masks.reserve(f.clauses.size());
  for (const auto& clause : f.clauses) {
    Masks m;
    for (const auto& l : clause) {
      if (l.variable < 1 || l.variable > f.num_variables) {
        throw ValidationError("variable " + std::to_string(l.variable) + " out of range");
      }
      (l.negated ? m.negative : m.positive) |= std::uint64_t{1} << (l.variable - 1);
    }
    masks.push_back(m);
  }
  const std::uint64_t total = std::uint64_t{1} << f.num_variables;
  std::uint64_t count = 0;
  for (std::uint64_t a = 0; a < total; ++a) {
    bool sat = true;
    for (const auto& m : masks) {
      if (!((a & m.positive) | (~a & m.negative))) {
        sat = false;
        break;
      }
    }
    count += sat;
  }
  return count;
}

CnfFormula compact_variables(const CnfFormula& f) {
  std::vector<std::uint32_t> renamed(f.num_variables + 1, 0);
  for (const auto& clause : f.clauses)
    for (const auto& l : clause) renamed.at(l.variable) = 1;
  CnfFormula out;
  for (std::size_t v = 1; v < renamed.size(); ++v) {
    if (renamed[v]) renamed[v] = static_cast<std::uint32_t>(++out.num_variables);
  }
  for (const auto& clause : f.clauses) {
    Clause c;
    for (const auto& l : clause) c.push_back({renamed[l.variable], l.negated});
    out.clauses.push_back(std::move(c));
  }
  return out;
}

}  // namespace cayley
