#pragma once

// CNF data model: literals, clauses, formulas and assignments.
//
// Variables are dense 0-based indices internally. DIMACS uses 1-based
// variables; Literal::from_dimacs / to_dimacs is the only place the two
// numbering schemes meet.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dimsat {

using Var = std::uint32_t;

struct Literal {
  Var var = 0;          // 0-based
  bool positive = true;

  static Literal from_dimacs(std::int64_t lit) {
    return Literal{static_cast<Var>((lit < 0 ? -lit : lit) - 1), lit > 0};
  }
  std::int64_t to_dimacs() const {
    const auto v = static_cast<std::int64_t>(var) + 1;
    return positive ? v : -v;
  }
  Literal operator~() const { return Literal{var, !positive}; }

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Clause {
  std::vector<Literal> literals;

  std::size_t size() const { return literals.size(); }
  bool empty() const { return literals.empty(); }
  auto begin() const { return literals.begin(); }
  auto end() const { return literals.end(); }

  friend bool operator==(const Clause&, const Clause&) = default;
};

struct Formula {
  Var num_vars = 0;
  std::vector<Clause> clauses;
  std::optional<std::string> source_name;

  std::size_t num_clauses() const { return clauses.size(); }

  // Structural equality ignores the source label.
  friend bool operator==(const Formula& a, const Formula& b) {
    return a.num_vars == b.num_vars && a.clauses == b.clauses;
  }
};

// Builds a formula from DIMACS-style signed literal lists. Mostly a
// convenience for tests and fixtures.
Formula make_formula(Var num_vars,
                     const std::vector<std::vector<std::int64_t>>& clauses);

class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t num_vars, bool value = false)
      : values_(num_vars, value ? 1 : 0) {}

  std::size_t size() const { return values_.size(); }
  bool operator[](Var v) const { return values_[v] != 0; }
  void set(Var v, bool value) { values_[v] = value ? 1 : 0; }
  void flip(Var v) { values_[v] ^= 1; }

  bool satisfies(Literal l) const { return (values_[l.var] != 0) == l.positive; }

  friend bool operator==(const Assignment&, const Assignment&) = default;
  // Lexicographic over (x1, ..., xn) with false < true.
  friend auto operator<=>(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::uint8_t> values_;
};

struct NormalizationReport {
  std::size_t duplicates_removed = 0;
  std::size_t tautologies_dropped = 0;
  std::size_t empty_clauses = 0;
  bool trivially_unsat = false;

  bool changed() const { return duplicates_removed + tautologies_dropped > 0; }
};

struct Normalized {
  Formula formula;
  NormalizationReport report;
};

// Removes duplicate literals (keeping first occurrence order) and drops
// tautological clauses. Empty clauses are kept and flagged.
Normalized normalize(const Formula& f);

// True when every clause is non-empty, duplicate-free and non-tautological.
bool is_normalized(const Formula& f);

bool evaluate_clause(const Clause& c, const Assignment& a);

// Indices of clauses falsified by `a`, ascending.
std::vector<std::size_t> evaluate(const Formula& f, const Assignment& a);

bool is_model(const Formula& f, const Assignment& a);

}  // namespace dimsat
