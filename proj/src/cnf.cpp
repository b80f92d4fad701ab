#include "doomsim/cnf.hpp"

#include <charconv>
#include <istream>
#include <sstream>

namespace doomsim {

std::uint64_t Assignment::to_index() const {
  std::uint64_t index = 0;
  for (bool b : bits) index = (index << 1) | (b ? 1u : 0u);
  return index;
}

Assignment Assignment::from_index(std::uint64_t index, int n) {
  Assignment a;
  a.bits.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) a.bits[static_cast<std::size_t>(i)] = (index >> (n - 1 - i)) & 1u;
  return a;
}

std::string Assignment::to_string() const {
  std::string s;
  s.reserve(bits.size());
  for (bool b : bits) s.push_back(b ? '1' : '0');
  return s;
}

namespace {

bool parse_int(const std::string& token, long long& out) {
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

} // namespace

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula formula;
  bool seen_header = false;
  long long expected_clauses = 0;
  std::vector<int> current;
  bool clause_open = false;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string tok;
    if (tokens >> tok) {
      if (tok[0] == 'c') continue; // comment line
      if (tok == "p") {
        if (seen_header) throw ParseError("duplicate 'p cnf' header", line_no);
        std::string kind;
        long long n = -1, m = -1;
        if (!(tokens >> kind >> n >> m) || kind != "cnf" || n < 0 || m < 0)
          throw ParseError("malformed header, expected 'p cnf <n> <m>'", line_no);
        std::string extra;
        if (tokens >> extra) throw ParseError("trailing tokens after header", line_no);
        formula.num_vars = static_cast<int>(n);
        expected_clauses = m;
        seen_header = true;
        continue;
      }
      if (!seen_header) throw ParseError("clause before 'p cnf' header", line_no);
      // fall through: tok is the first literal of this line
      do {
        long long lit = 0;
        if (!parse_int(tok, lit)) throw ParseError("non-integer token '" + tok + "'", line_no);
        if (lit == 0) {
          formula.clauses.push_back(current);
          current.clear();
          clause_open = false;
        } else {
          if (lit < -formula.num_vars || lit > formula.num_vars)
            throw ParseError("literal out of range: " + std::to_string(lit), line_no);
          current.push_back(static_cast<int>(lit));
          clause_open = true;
        }
      } while (tokens >> tok);
    }
  }
  if (!seen_header) throw ParseError("missing 'p cnf' header");
  if (clause_open) throw ParseError("unterminated clause at end of input", line_no);
  if (static_cast<long long>(formula.clauses.size()) != expected_clauses)
    throw ParseError("clause count mismatch: header says " + std::to_string(expected_clauses) +
                     ", found " + std::to_string(formula.clauses.size()));
  return formula;
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

std::string serialize_dimacs(const CnfFormula& formula) {
  std::ostringstream out;
  out << "p cnf " << formula.num_vars << ' ' << formula.clauses.size() << '\n';
  for (const auto& clause : formula.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

int evaluate(const CnfFormula& formula, const Assignment& s) {
  if (static_cast<int>(s.bits.size()) != formula.num_vars)
    throw std::invalid_argument("assignment length does not match num_vars");
  for (const auto& clause : formula.clauses) {
    bool satisfied = false;
    for (int lit : clause) {
      const bool value = s.bits[static_cast<std::size_t>(std::abs(lit) - 1)];
      if ((lit > 0) == value) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return 0;
  }
  return 1;
}

std::vector<Assignment> brute_force_solutions(const CnfFormula& formula, int max_vars) {
  if (formula.num_vars > max_vars)
    throw std::invalid_argument("num_vars exceeds enumeration guard (" +
                                std::to_string(max_vars) + ")");
  std::vector<Assignment> solutions;
  const std::uint64_t count = std::uint64_t{1} << formula.num_vars;
  for (std::uint64_t index = 0; index < count; ++index) {
    Assignment s = Assignment::from_index(index, formula.num_vars);
    if (evaluate(formula, s)) solutions.push_back(std::move(s));
  }
  return solutions;
}

} // namespace doomsim
