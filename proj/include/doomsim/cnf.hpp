#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "doomsim/errors.hpp"

namespace doomsim {

/// CNF formula over variables 1..num_vars. A literal is a nonzero signed
/// integer v with |v| <= num_vars; positive asserts the variable, negative
/// negates it. Clause and literal order are preserved from the input so that
/// compilation stays deterministic. Empty clauses are legal (and unsatisfiable).
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

/// Candidate solution: bit i is the value of variable i+1.
struct Assignment {
  std::vector<bool> bits;

  /// Numeric value with bit 0 as the most significant position.
  std::uint64_t to_index() const;
  static Assignment from_index(std::uint64_t index, int n);
  std::string to_string() const;

  bool operator==(const Assignment&) const = default;
};

/// Parse DIMACS CNF: comment lines starting with 'c', one 'p cnf <n> <m>'
/// header, then m zero-terminated clauses. Throws ParseError with the
/// offending line number.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(const std::string& text);

/// Emit 'p cnf n m' then one clause per line, space-separated literals,
/// 0-terminated, no comments.
std::string serialize_dimacs(const CnfFormula& formula);

/// The verification predicate f(s): 1 iff every clause has a satisfied
/// literal. A clause-free formula is the empty conjunction and returns 1.
int evaluate(const CnfFormula& formula, const Assignment& s);

/// All satisfying assignments in ascending numeric order. This is the
/// independent correctness oracle; the guard keeps it out of exponential
/// territory by accident.
std::vector<Assignment> brute_force_solutions(const CnfFormula& formula, int max_vars = 24);

} // namespace doomsim
