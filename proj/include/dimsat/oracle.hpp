#pragma once

// Exhaustive ground truth for small formulas.
//
// Both variants walk the assignment space in Gray-code order with
// incremental clause counters. They use their own evaluator, not
// ClausePartition, so they stay independent of the engine under test.
// Any formula is accepted, normalized or not.

#include <cstdint>
#include <optional>

#include "dimsat/cnf.hpp"

namespace dimsat {

inline constexpr Var brute_force_cap = 26;

struct OracleResult {
  bool sat = false;
  std::optional<Assignment> model;  // lexicographically first model

  friend bool operator==(const OracleResult&, const OracleResult&) = default;
};

// OpenMP version: the space is split on the leading variables into
// lexicographically ordered chunks. Throws std::invalid_argument above the cap.
OracleResult brute_force_solve(const Formula& f);
// Reference: one Gray-code walk over the whole space.
OracleResult brute_force_solve_serial(const Formula& f);

std::uint64_t count_models(const Formula& f);
std::uint64_t count_models_serial(const Formula& f);

}  // namespace dimsat
