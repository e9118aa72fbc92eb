#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <string_view>
#include <vector>

namespace cayley {

struct Literal {
  std::uint32_t variable = 1;
  bool negated = false;

  Literal operator!() const { return {variable, !negated}; }
  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

inline Literal pos(std::uint32_t v) { return {v, false}; }
inline Literal neg(std::uint32_t v) { return {v, true}; }

using Clause = std::vector<Literal>;

struct CnfFormula {
  std::size_t num_variables = 0;
  std::vector<Clause> clauses;
};

/// values[v - 1] is the truth value of variable v.
using Assignment = std::vector<bool>;

inline constexpr std::size_t kDefaultMaxVars = 24;

/// DIMACS cnf reader. Comment lines start with 'c'; a '%' line ends the input.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(std::string_view text);

struct NormalizedFormula {
  CnfFormula formula;
  std::size_t tautologies_removed = 0;
};

/// Deduplicates literals, drops tautological clauses, rejects clauses with
/// zero or more than three literals.
NormalizedFormula normalize_3sat(const CnfFormula& f);

bool evaluate(const CnfFormula& f, const Assignment& a);

/// Exact model count over all 2^num_variables assignments.
std::uint64_t count_satisfying(const CnfFormula& f, std::size_t max_vars = kDefaultMaxVars);

/// Renumbers the variables that occur in some clause to 1..k (in increasing
/// order of original index) and drops the rest.
CnfFormula compact_variables(const CnfFormula& f);

}  // namespace cayley
