#include <doctest.h>

#include <random>
#include <set>

#include "doomsim/cnf.hpp"
#include "test_helpers.hpp"

using namespace doomsim;

TEST_CASE("parse_dimacs basic formula") {
  const CnfFormula f = parse_dimacs("p cnf 2 2\n1 -2 0\n-1 2 0");
  CHECK(f.num_vars == 2);
  REQUIRE(f.clauses.size() == 2);
  CHECK(f.clauses[0] == std::vector<int>{1, -2});
  CHECK(f.clauses[1] == std::vector<int>{-1, 2});
}

TEST_CASE("parse_dimacs skips comments") {
  const CnfFormula f = parse_dimacs("c hi\np cnf 1 1\n1 0");
  CHECK(f.num_vars == 1);
  REQUIRE(f.clauses.size() == 1);
  CHECK(f.clauses[0] == std::vector<int>{1});
}

TEST_CASE("parse_dimacs error paths report line numbers") {
  CHECK_THROWS_WITH_AS(parse_dimacs("p cnf 1 1\n2 0"),
                       "line 2: literal out of range: 2", ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\np cnf 1 1\n1 0"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("1 0"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 1 2\n1 0"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\nx 0"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n1"), ParseError);
}

TEST_CASE("parse_dimacs accepts empty clauses and multi-line clauses") {
  const CnfFormula f = parse_dimacs("p cnf 2 2\n0\n1\n2 0");
  REQUIRE(f.clauses.size() == 2);
  CHECK(f.clauses[0].empty());
  CHECK(f.clauses[1] == std::vector<int>{1, 2});
}

TEST_CASE("evaluate on the worked two-clause example") {
  const CnfFormula f = parse_dimacs("p cnf 2 2\n1 -2 0\n-1 2 0");
  CHECK(evaluate(f, Assignment{{true, true}}) == 1);
  CHECK(evaluate(f, Assignment{{true, false}}) == 0);
  CHECK(evaluate(f, Assignment{{false, false}}) == 1);
  CHECK_THROWS_AS(evaluate(f, Assignment{{true}}), std::invalid_argument);
}

TEST_CASE("evaluate: empty conjunction is true, empty clause is false") {
  CnfFormula empty;
  empty.num_vars = 3;
  CHECK(evaluate(empty, Assignment::from_index(5, 3)) == 1);

  CnfFormula with_empty_clause;
  with_empty_clause.num_vars = 1;
  with_empty_clause.clauses = {{}};
  CHECK(evaluate(with_empty_clause, Assignment{{true}}) == 0);
}

TEST_CASE("brute_force_solutions worked examples") {
  const CnfFormula f = parse_dimacs("p cnf 2 2\n1 -2 0\n-1 2 0");
  const auto sols = brute_force_solutions(f);
  REQUIRE(sols.size() == 2);
  CHECK(sols[0].to_string() == "00");
  CHECK(sols[1].to_string() == "11");

  const CnfFormula contradiction = parse_dimacs("p cnf 1 2\n1 0\n-1 0");
  CHECK(brute_force_solutions(contradiction).empty());

  const CnfFormula forced = parse_dimacs("p cnf 1 1\n1 0");
  const auto forced_sols = brute_force_solutions(forced);
  REQUIRE(forced_sols.size() == 1);
  CHECK(forced_sols[0].to_string() == "1");
}

TEST_CASE("brute_force_solutions respects the enumeration guard") {
  CnfFormula f;
  f.num_vars = 25;
  CHECK_THROWS_AS(brute_force_solutions(f), std::invalid_argument);
  CHECK_NOTHROW(brute_force_solutions(f, 25));
}

TEST_CASE("brute force equals per-assignment evaluation on random formulas") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 25; ++round) {
    const CnfFormula f = testing::random_cnf(rng, 5, 8);
    std::set<std::uint64_t> expected;
    for (std::uint64_t i = 0; i < 32; ++i)
      if (evaluate(f, Assignment::from_index(i, 5))) expected.insert(i);
    const auto sols = brute_force_solutions(f);
    REQUIRE(sols.size() == expected.size());
    std::uint64_t previous = 0;
    bool first = true;
    for (const auto& s : sols) {
      CHECK(expected.count(s.to_index()) == 1);
      if (!first) CHECK(s.to_index() > previous); // ascending order
      previous = s.to_index();
      first = false;
    }
  }
}

TEST_CASE("parse/serialize round trip") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 20; ++round) {
    const CnfFormula f = testing::random_cnf(rng, 6, 10);
    const CnfFormula back = parse_dimacs(serialize_dimacs(f));
    CHECK(back.num_vars == f.num_vars);
    CHECK(back.clauses == f.clauses);
  }
}
