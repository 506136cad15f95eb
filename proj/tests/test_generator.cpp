#include <set>

#include "doctest.h"
#include "dimsat/dimacs.hpp"
#include "dimsat/generator.hpp"
#include "test_util.hpp"

using namespace dimsat;
using namespace dimsat::testing;

namespace {

GenSpec spec(Var n, std::uint64_t m, Var k, std::uint64_t seed) {
  GenSpec g;
  g.num_vars = n;
  g.num_clauses = m;
  g.k = k;
  g.seed = seed;
  return g;
}

}  // namespace

TEST_CASE("generated shape") {
  const Formula f = gen_random_ksat(spec(20, 85, 3, 1));
  CHECK(f.num_vars == 20);
  CHECK(f.clauses.size() == 85);
  for (const auto& c : f.clauses) {
    REQUIRE(c.size() == 3);
    CHECK(c.literals[0].var < c.literals[1].var);
    CHECK(c.literals[1].var < c.literals[2].var);
  }
  CHECK(is_normalized(f));
}

TEST_CASE("generation is a pure function of its parameters") {
  CHECK(gen_random_ksat(spec(50, 213, 3, 9)) == gen_random_ksat(spec(50, 213, 3, 9)));
  CHECK_FALSE(gen_random_ksat(spec(50, 213, 3, 9)) == gen_random_ksat(spec(50, 213, 3, 10)));
}

TEST_CASE("ratio to clause count") {
  CHECK(clauses_for_ratio(100, 4.26) == 426);
  CHECK(clauses_for_ratio(20, 4.26) == 85);
  CHECK(clauses_for_ratio(50, 4.26) == 213);
}

TEST_CASE("polarity and variable marginals are uniform") {
  const Formula f = gen_random_ksat(spec(100, 10000, 3, 77));
  std::size_t positive = 0;
  std::vector<std::size_t> per_var(100, 0);
  for (const auto& c : f.clauses)
    for (auto l : c) {
      positive += l.positive;
      ++per_var[l.var];
    }
  const double share = static_cast<double>(positive) / 30000.0;
  CHECK(share == doctest::Approx(0.5).epsilon(0.04));
  CHECK(std::abs(share - 0.5) <= 0.02);
  // 300 expected per variable; 6 standard deviations is about 100.
  for (auto count : per_var) {
    CHECK(count > 200);
    CHECK(count < 400);
  }
}

TEST_CASE("no-duplicate mode") {
  GenSpec g = spec(5, 80, 3, 4);
  g.allow_duplicate_clauses = false;
  const Formula f = gen_random_ksat(g);
  std::set<std::vector<int64_t>> seen;
  for (const auto& c : f.clauses) {
    std::vector<int64_t> key;
    for (auto l : c) key.push_back(l.to_dimacs());
    seen.insert(key);
  }
  CHECK(seen.size() == 80);

  g.num_clauses = 81;  // C(5,3) * 8 = 80 distinct clauses exist
  CHECK_THROWS_AS(gen_random_ksat(g), std::invalid_argument);
}

TEST_CASE("invalid specs") {
  CHECK_THROWS_AS(gen_random_ksat(spec(3, 5, 4, 0)), std::invalid_argument);
  CHECK_THROWS_AS(gen_random_ksat(spec(3, 5, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(gen_random_ksat(spec(3, 0, 3, 0)), std::invalid_argument);
  CHECK_NOTHROW(gen_random_ksat(spec(3, 1, 3, 0)));
}

TEST_CASE("comment line and DIMACS output") {
  const GenSpec g = spec(20, 85, 3, 7);
  CHECK(gen_comment(g) == "dimsat gen n=20 m=85 k=3 seed=7");
  const Formula f = gen_random_ksat(g);
  const std::string text = serialize_dimacs(f, {gen_comment(g)});
  CHECK(text.rfind("c dimsat gen n=20 m=85 k=3 seed=7\np cnf 20 85\n", 0) == 0);
  CHECK(parse_dimacs(text) == f);
}
