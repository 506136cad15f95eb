#include "dimsat/result.hpp"

#include <string>

namespace dimsat {

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::sat: return "sat";
    case SolveStatus::unsat_exhausted: return "unsat_exhausted";
    case SolveStatus::unknown: return "unknown";
  }
  return "unknown";
}

int exit_code(SolveStatus s) {
  switch (s) {
    case SolveStatus::sat: return 10;
    case SolveStatus::unsat_exhausted: return 20;
    case SolveStatus::unknown: return 0;
  }
  return 0;
}

std::string emit_certificate(const SolveResult& r) {
  switch (r.status) {
    case SolveStatus::unsat_exhausted: return "s UNSATISFIABLE\n";
    case SolveStatus::unknown: return "s UNKNOWN\n";
    case SolveStatus::sat: break;
  }
  if (!r.model) return "s UNKNOWN\n";

  // v lines are wrapped before 80 columns.
  constexpr std::size_t width = 78;
  std::string out = "s SATISFIABLE\n";
  std::string line = "v";
  auto push = [&](const std::string& tok) {
    if (line.size() + 1 + tok.size() > width) {
      out += line + '\n';
      line = "v";
    }
    line += ' ';
    line += tok;
  };
  const Assignment& m = *r.model;
  for (Var v = 0; v < m.size(); ++v) {
    const auto lit = static_cast<long long>(v) + 1;
    push(std::to_string(m[v] ? lit : -lit));
  }
  push("0");
  out += line + '\n';
  return out;
}

}  // namespace dimsat
