#include "dimsat/generator.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "dimsat/rng.hpp"

namespace dimsat {

namespace {

// min(C(n, k) * 2^k, cap) without overflow.
std::uint64_t distinct_clause_count(Var n, Var k, std::uint64_t cap) {
  long double c = 1;
  for (Var i = 0; i < k; ++i) {
    c = c * (n - i) / (i + 1);
    if (c > static_cast<long double>(cap)) return cap;
  }
  c *= std::pow(2.0L, static_cast<long double>(k));
  return c > static_cast<long double>(cap) ? cap : static_cast<std::uint64_t>(c + 0.5L);
}

}  // namespace

void GenSpec::validate() const {
  if (k < 1) throw std::invalid_argument("clause width k must be >= 1");
  if (k > num_vars) throw std::invalid_argument("clause width k exceeds num_vars");
  if (num_clauses < 1) throw std::invalid_argument("num_clauses must be >= 1");
  if (!allow_duplicate_clauses && distinct_clause_count(num_vars, k, num_clauses) < num_clauses)
    throw std::invalid_argument("not enough distinct clauses for these parameters");
}

std::uint64_t clauses_for_ratio(Var num_vars, double ratio) {
  if (!(ratio > 0)) throw std::invalid_argument("ratio must be positive");
  return static_cast<std::uint64_t>(std::llround(ratio * num_vars));
}

Formula gen_random_ksat(const GenSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  Formula f;
  f.num_vars = spec.num_vars;
  f.clauses.reserve(spec.num_clauses);

  std::vector<std::uint8_t> picked(spec.num_vars, 0);
  std::set<std::vector<std::int64_t>> seen;
  while (f.clauses.size() < spec.num_clauses) {
    Clause c;
    while (c.size() < spec.k) {
      const auto v = static_cast<Var>(uniform_below(rng, spec.num_vars));
      if (picked[v]) continue;
      picked[v] = 1;
      c.literals.push_back(Literal{v, coin(rng)});
    }
    for (auto l : c) picked[l.var] = 0;
    std::sort(c.literals.begin(), c.literals.end(),
              [](Literal a, Literal b) { return a.var < b.var; });

    if (!spec.allow_duplicate_clauses) {
      std::vector<std::int64_t> key;
      for (auto l : c) key.push_back(l.to_dimacs());
      if (!seen.insert(std::move(key)).second) continue;
    }
    f.clauses.push_back(std::move(c));
  }
  return f;
}

std::string gen_comment(const GenSpec& spec) {
  return "dimsat gen n=" + std::to_string(spec.num_vars) +
         " m=" + std::to_string(spec.num_clauses) + " k=" + std::to_string(spec.k) +
         " seed=" + std::to_string(spec.seed);
}

}  // namespace dimsat
