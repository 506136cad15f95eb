#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "dimsat/cnf.hpp"

namespace dimsat {

enum class SolveStatus { sat, unsat_exhausted, unknown };

std::string_view to_string(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::unknown;
  std::optional<Assignment> model;  // present iff status == sat
  std::uint64_t iterations = 0;
  std::uint64_t restarts_used = 0;
  std::size_t final_dimensionality = 0;

  friend bool operator==(const SolveResult&, const SolveResult&) = default;
};

// SAT-competition output: "s SATISFIABLE" followed by "v" lines of signed
// literals ending in 0, "s UNSATISFIABLE", or "s UNKNOWN".
std::string emit_certificate(const SolveResult& r);

// SAT-competition exit code convention: 10 sat, 20 unsat, 0 unknown.
int exit_code(SolveStatus s);

}  // namespace dimsat
