#include "doctest.h"
#include "dimsat/oracle.hpp"
#include "test_util.hpp"

using namespace dimsat;
using namespace dimsat::testing;

TEST_CASE("brute force on tiny formulas") {
  const auto r = brute_force_solve(make_formula(2, {{1, 2}}));
  CHECK(r.sat);
  REQUIRE(r.model);
  CHECK_FALSE((*r.model)[0]);
  CHECK((*r.model)[1]);

  CHECK_FALSE(brute_force_solve(make_formula(1, {{1}, {-1}})).sat);

  Formula empty;
  const auto e = brute_force_solve(empty);
  CHECK(e.sat);
  CHECK(e.model->size() == 0);

  CHECK_FALSE(brute_force_solve(pigeonhole(3)).sat);
  CHECK_FALSE(brute_force_solve(full_sign_core(4, 9)).sat);
}

TEST_CASE("brute force accepts unnormalized input") {
  Formula f = make_formula(3, {{1, 1, -2}, {2, -2}});
  CHECK(brute_force_solve(f).sat);
  f.clauses.push_back(Clause{});
  CHECK_FALSE(brute_force_solve(f).sat);
  CHECK(count_models(f) == 0);
}

TEST_CASE("brute force refuses formulas above the cap") {
  Formula f;
  f.num_vars = brute_force_cap + 1;
  CHECK_THROWS_AS(brute_force_solve(f), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_solve_serial(f), std::invalid_argument);
  CHECK_THROWS_AS(count_models(f), std::invalid_argument);
}

TEST_CASE("parallel, serial and naive enumeration agree") {
  Rng rng(55);
  for (int round = 0; round < 300; ++round) {
    const Var n = static_cast<Var>(uniform_below(rng, 15));
    const Formula f = n ? messy_formula(rng, n, uniform_below(rng, 5 * n + 1)) : Formula{};
    const auto expected = naive_first_model(f);
    const auto par = brute_force_solve(f);
    const auto ser = brute_force_solve_serial(f);
    CHECK(par == ser);
    CHECK(par.sat == expected.has_value());
    if (expected) CHECK(*par.model == *expected);
    const auto count = naive_model_count(f);
    CHECK(count_models(f) == count);
    CHECK(count_models_serial(f) == count);
  }
}

TEST_CASE("model counts of known families") {
  CHECK(count_models(make_formula(3, {{1, 2, 3}})) == 7);
  CHECK(count_models(make_formula(4, {{1}, {-2}})) == 4);
  Formula free;
  free.num_vars = 20;
  CHECK(count_models(free) == (std::uint64_t{1} << 20));
}

TEST_CASE("larger random instances agree between parallel and serial") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Formula f = random_3sat(20, 85, seed);
    CHECK(brute_force_solve(f) == brute_force_solve_serial(f));
    CHECK(count_models(f) == count_models_serial(f));
  }
}
