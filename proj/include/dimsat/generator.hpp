#pragma once

#include <cstdint>
#include <string>

#include "dimsat/cnf.hpp"

namespace dimsat {

// Fixed clause length random k-SAT.
struct GenSpec {
  Var num_vars = 0;
  std::uint64_t num_clauses = 0;
  Var k = 3;
  std::uint64_t seed = 0;
  bool allow_duplicate_clauses = true;

  // Throws std::invalid_argument.
  void validate() const;
};

// round(ratio * num_vars)
std::uint64_t clauses_for_ratio(Var num_vars, double ratio);

// Each clause draws k distinct variables uniformly and each polarity with
// probability 1/2. Literals within a clause are sorted by variable.
Formula gen_random_ksat(const GenSpec& spec);

// "dimsat gen n=<n> m=<m> k=<k> seed=<seed>"
std::string gen_comment(const GenSpec& spec);

}  // namespace dimsat
