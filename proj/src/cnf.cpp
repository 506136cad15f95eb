#include "dimsat/cnf.hpp"

#include <stdexcept>

namespace dimsat {

Formula make_formula(Var num_vars,
                     const std::vector<std::vector<std::int64_t>>& clauses) {
  Formula f;
  f.num_vars = num_vars;
  f.clauses.reserve(clauses.size());
  for (const auto& lits : clauses) {
    Clause c;
    for (auto lit : lits) {
      if (lit == 0 || static_cast<std::uint64_t>(lit < 0 ? -lit : lit) > num_vars)
        throw std::invalid_argument("literal out of range: " + std::to_string(lit));
      c.literals.push_back(Literal::from_dimacs(lit));
    }
    f.clauses.push_back(std::move(c));
  }
  return f;
}

Normalized normalize(const Formula& f) {
  Normalized out;
  out.formula.num_vars = f.num_vars;
  out.formula.source_name = f.source_name;
  out.formula.clauses.reserve(f.clauses.size());

  // seen[v]: 0 unseen, 1 positive seen, 2 negative seen, 3 both
  std::vector<std::uint8_t> seen(f.num_vars, 0);
  for (const auto& c : f.clauses) {
    Clause kept;
    bool tautology = false;
    for (auto l : c) {
      const std::uint8_t bit = l.positive ? 1 : 2;
      if (seen[l.var] & bit) {
        ++out.report.duplicates_removed;
        continue;
      }
      if (seen[l.var]) tautology = true;
      seen[l.var] |= bit;
      kept.literals.push_back(l);
    }
    for (auto l : c) seen[l.var] = 0;

    if (tautology) {
      ++out.report.tautologies_dropped;
      continue;
    }
    if (kept.empty()) {
      ++out.report.empty_clauses;
      out.report.trivially_unsat = true;
    }
    out.formula.clauses.push_back(std::move(kept));
  }
  return out;
}

bool is_normalized(const Formula& f) {
  std::vector<std::uint8_t> seen(f.num_vars, 0);
  for (const auto& c : f.clauses) {
    if (c.empty()) return false;
    bool ok = true;
    for (auto l : c) {
      if (l.var >= f.num_vars || seen[l.var]) ok = false;
      else seen[l.var] = 1;
    }
    for (auto l : c)
      if (l.var < f.num_vars) seen[l.var] = 0;
    if (!ok) return false;
  }
  return true;
}

bool evaluate_clause(const Clause& c, const Assignment& a) {
  for (auto l : c)
    if (a.satisfies(l)) return true;
  return false;
}

std::vector<std::size_t> evaluate(const Formula& f, const Assignment& a) {
  if (a.size() != f.num_vars)
    throw std::invalid_argument("assignment length does not match num_vars");
  std::vector<std::size_t> unsat;
  for (std::size_t i = 0; i < f.clauses.size(); ++i)
    if (!evaluate_clause(f.clauses[i], a)) unsat.push_back(i);
  return unsat;
}

bool is_model(const Formula& f, const Assignment& a) {
  if (a.size() != f.num_vars) return false;
  for (const auto& c : f.clauses)
    if (!evaluate_clause(c, a)) return false;
  return true;
}

}  // namespace dimsat
