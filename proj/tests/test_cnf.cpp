#include <sstream>

#include "doctest.h"
#include "dimsat/cnf.hpp"
#include "dimsat/dimacs.hpp"
#include "dimsat/result.hpp"
#include "test_util.hpp"

using namespace dimsat;
using namespace dimsat::testing;

namespace {

// X=1 Y=2 Z=3 A=4 B=5 C=6 Q=7 W=8 E=9 R=10 S=11 T=12 D=13 M=14 N=15 O=16
Formula schematic_instance() {
  return make_formula(16, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {10, 11, 12},
                           {-4, -11, -13}, {-14, -15, -16}});
}

}  // namespace

TEST_CASE("literal numbering maps DIMACS 1-based to dense 0-based") {
  CHECK(Literal::from_dimacs(1) == Literal{0, true});
  CHECK(Literal::from_dimacs(-7) == Literal{6, false});
  CHECK(Literal{6, false}.to_dimacs() == -7);
  CHECK((~Literal{2, true}) == Literal{2, false});
}

TEST_CASE("evaluate_clause") {
  const Formula f = schematic_instance();
  const Assignment all_true(16, true);
  CHECK_FALSE(evaluate_clause(f.clauses[4], all_true));  // (!A+!S+!D)
  CHECK(evaluate_clause(f.clauses[0], all_true));        // (X+Y+Z)

  const Formula unit = make_formula(1, {{1}});
  CHECK_FALSE(evaluate_clause(unit.clauses[0], Assignment(1, false)));
}

TEST_CASE("evaluate lists exactly the falsified clauses") {
  const Formula f = schematic_instance();
  CHECK(evaluate(f, Assignment(16, true)) == std::vector<std::size_t>{4, 5});

  CHECK(evaluate(Formula{}, Assignment{}).empty());

  const Formula contra = make_formula(1, {{1}, {-1}});
  CHECK(evaluate(contra, Assignment(1, true)) == std::vector<std::size_t>{1});
  CHECK(evaluate(contra, Assignment(1, false)) == std::vector<std::size_t>{0});

  CHECK_THROWS_AS(evaluate(f, Assignment(3)), std::invalid_argument);
}

TEST_CASE("evaluate agrees with evaluate_clause on random formulas") {
  Rng rng(11);
  for (int round = 0; round < 200; ++round) {
    const Var n = 1 + static_cast<Var>(uniform_below(rng, 12));
    const Formula f = random_formula(rng, n, uniform_below(rng, 30));
    const Assignment a = random_assignment(rng, n);
    const auto unsat = evaluate(f, a);
    std::size_t j = 0;
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
      const bool listed = j < unsat.size() && unsat[j] == i;
      CHECK(listed == !evaluate_clause(f.clauses[i], a));
      if (listed) ++j;
    }
    CHECK(unsat.empty() == is_model(f, a));
  }
}

TEST_CASE("normalize removes duplicates and drops tautologies") {
  SUBCASE("duplicate literal") {
    const auto n = normalize(make_formula(2, {{1, 1, 2}}));
    CHECK(n.formula == make_formula(2, {{1, 2}}));
    CHECK(n.report.duplicates_removed == 1);
    CHECK_FALSE(n.report.trivially_unsat);
  }
  SUBCASE("tautology") {
    const auto n = normalize(make_formula(2, {{1, -1, 2}}));
    CHECK(n.formula.clauses.empty());
    CHECK(n.report.tautologies_dropped == 1);
  }
  SUBCASE("empty clause") {
    Formula f = make_formula(2, {{1, 2}});
    f.clauses.push_back(Clause{});
    const auto n = normalize(f);
    CHECK(n.report.trivially_unsat);
    CHECK(n.report.empty_clauses == 1);
    CHECK_FALSE(is_normalized(n.formula));
  }
}

TEST_CASE("normalize is idempotent and yields normalized formulas") {
  Rng rng(5);
  for (int round = 0; round < 300; ++round) {
    const Var n = 1 + static_cast<Var>(uniform_below(rng, 6));
    const Formula f = messy_formula(rng, n, uniform_below(rng, 12));
    const auto once = normalize(f);
    const auto twice = normalize(once.formula);
    CHECK(twice.formula == once.formula);
    CHECK_FALSE(twice.report.changed());
    CHECK(is_normalized(once.formula) == !once.report.trivially_unsat);

    // Normalization never changes which assignments are models.
    for (int k = 0; k < 4; ++k) {
      const Assignment a = random_assignment(rng, n);
      CHECK(is_model(f, a) == is_model(once.formula, a));
    }
  }
}

TEST_CASE("assignments order lexicographically with false first") {
  Assignment a(3, false);
  Assignment b(3, false);
  b.set(2, true);
  Assignment c(3, false);
  c.set(0, true);
  CHECK(a < b);
  CHECK(b < c);
}

TEST_CASE("emit_certificate") {
  SolveResult r;
  r.status = SolveStatus::sat;
  Assignment m(2);
  m.set(0, true);
  r.model = m;
  CHECK(emit_certificate(r) == "s SATISFIABLE\nv 1 -2 0\n");

  r.status = SolveStatus::unknown;
  r.model.reset();
  CHECK(emit_certificate(r) == "s UNKNOWN\n");

  r.status = SolveStatus::unsat_exhausted;
  CHECK(emit_certificate(r) == "s UNSATISFIABLE\n");

  CHECK(exit_code(SolveStatus::sat) == 10);
  CHECK(exit_code(SolveStatus::unsat_exhausted) == 20);
  CHECK(exit_code(SolveStatus::unknown) == 0);
}

TEST_CASE("long models wrap into several v lines") {
  SolveResult r;
  r.status = SolveStatus::sat;
  Assignment m(300);
  for (Var v = 0; v < 300; v += 3) m.set(v, true);
  r.model = m;
  const std::string cert = emit_certificate(r);

  std::istringstream in(cert);
  std::string line;
  std::getline(in, line);
  CHECK(line == "s SATISFIABLE");
  std::vector<long long> lits;
  int vlines = 0;
  while (std::getline(in, line)) {
    CHECK(line.size() <= 78);
    REQUIRE(line.rfind("v ", 0) == 0);
    ++vlines;
    std::istringstream toks(line.substr(2));
    long long x;
    while (toks >> x) lits.push_back(x);
  }
  CHECK(vlines > 1);
  REQUIRE(lits.size() == 301);
  CHECK(lits.back() == 0);
  for (Var v = 0; v < 300; ++v) CHECK(lits[v] == (m[v] ? 1 : -1) * (long long)(v + 1));
}
