#include "dimsat/oracle.hpp"

#include <atomic>
#include <stdexcept>
#include <vector>

namespace dimsat {

namespace {

// Occurrence lists with multiplicity, so duplicate literals, tautologies
// and empty clauses all evaluate correctly.
struct Occurrences {
  std::vector<std::uint32_t> offsets;
  std::vector<std::uint32_t> clause;
  std::vector<std::uint8_t> positive;

  explicit Occurrences(const Formula& f) : offsets(f.num_vars + 1, 0) {
    for (const auto& c : f.clauses)
      for (auto l : c) ++offsets[l.var + 1];
    for (Var v = 0; v < f.num_vars; ++v) offsets[v + 1] += offsets[v];
    clause.resize(offsets.back());
    positive.resize(offsets.back());
    std::vector<std::uint32_t> fill(offsets.begin(), offsets.end() - 1);
    for (std::uint32_t i = 0; i < f.clauses.size(); ++i)
      for (auto l : f.clauses[i]) {
        clause[fill[l.var]] = i;
        positive[fill[l.var]++] = l.positive;
      }
  }
};

class Evaluator {
 public:
  Evaluator(const Formula& f, const Occurrences& occ, Assignment a)
      : occ_(occ), a_(std::move(a)), true_count_(f.clauses.size(), 0) {
    for (std::size_t c = 0; c < f.clauses.size(); ++c) {
      for (auto l : f.clauses[c]) true_count_[c] += a_.satisfies(l);
      if (true_count_[c] == 0) ++unsat_;
    }
  }

  void flip(Var v) {
    a_.flip(v);
    const bool now_true = a_[v];
    for (auto i = occ_.offsets[v]; i < occ_.offsets[v + 1]; ++i) {
      const auto c = occ_.clause[i];
      if ((occ_.positive[i] != 0) == now_true) {
        if (true_count_[c]++ == 0) --unsat_;
      } else {
        if (--true_count_[c] == 0) ++unsat_;
      }
    }
  }

  bool satisfied() const { return unsat_ == 0; }

 private:
  const Occurrences& occ_;
  Assignment a_;
  std::vector<std::uint32_t> true_count_;
  std::size_t unsat_ = 0;
};

void check_cap(const Formula& f) {
  if (f.num_vars > brute_force_cap)
    throw std::invalid_argument("brute force is capped at " +
                                std::to_string(brute_force_cap) + " variables");
}

// Variable v maps to bit (n - 1 - v) of a code, so codes order assignments
// lexicographically.
Assignment decode(Var n, std::uint64_t code) {
  Assignment a(n);
  for (Var v = 0; v < n; ++v) a.set(v, (code >> (n - 1 - v)) & 1);
  return a;
}

struct ChunkScan {
  std::optional<std::uint64_t> first_suffix;  // smallest model suffix code
  std::uint64_t models = 0;
};

// Enumerates the whole chunk whose leading `prefix_bits` variables spell
// `prefix`. Gray order is not lexicographic, so the chunk is always scanned
// to the end.
ChunkScan scan_chunk(const Formula& f, const Occurrences& occ, unsigned prefix_bits,
                     std::uint64_t prefix) {
  const Var n = f.num_vars;
  const unsigned suffix_bits = n - prefix_bits;
  Evaluator ev(f, occ, decode(n, prefix << suffix_bits));
  ChunkScan out;
  auto visit = [&](std::uint64_t code) {
    if (!ev.satisfied()) return;
    ++out.models;
    if (!out.first_suffix || code < *out.first_suffix) out.first_suffix = code;
  };
  visit(0);
  const std::uint64_t points = std::uint64_t{1} << suffix_bits;
  for (std::uint64_t i = 1; i < points; ++i) {
    const unsigned bit = static_cast<unsigned>(__builtin_ctzll(i));
    ev.flip(static_cast<Var>(n - 1 - bit));
    visit(i ^ (i >> 1));
  }
  return out;
}

unsigned prefix_bits_for(Var n) { return n < 10 ? n : 10; }

}  // namespace

OracleResult brute_force_solve_serial(const Formula& f) {
  check_cap(f);
  const Occurrences occ(f);
  const auto scan = scan_chunk(f, occ, 0, 0);
  if (!scan.first_suffix) return {};
  return {true, decode(f.num_vars, *scan.first_suffix)};
}

OracleResult brute_force_solve(const Formula& f) {
  check_cap(f);
  const Occurrences occ(f);
  const Var n = f.num_vars;
  const unsigned pbits = prefix_bits_for(n);
  const std::uint64_t chunks = std::uint64_t{1} << pbits;
  std::vector<std::optional<std::uint64_t>> found(chunks);
  std::atomic<std::uint64_t> first{chunks};

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(chunks); ++i) {
    const auto c = static_cast<std::uint64_t>(i);
    if (c > first.load(std::memory_order_relaxed)) continue;
    const auto scan = scan_chunk(f, occ, pbits, c);
    if (!scan.first_suffix) continue;
    found[c] = scan.first_suffix;
    std::uint64_t cur = first.load();
    while (c < cur && !first.compare_exchange_weak(cur, c)) {
    }
  }

  const std::uint64_t c = first.load();
  if (c == chunks) return {};
  return {true, decode(n, (c << (n - pbits)) | *found[c])};
}

std::uint64_t count_models_serial(const Formula& f) {
  check_cap(f);
  const Occurrences occ(f);
  return scan_chunk(f, occ, 0, 0).models;
}

std::uint64_t count_models(const Formula& f) {
  check_cap(f);
  const Occurrences occ(f);
  const unsigned pbits = prefix_bits_for(f.num_vars);
  const auto chunks = static_cast<std::int64_t>(std::uint64_t{1} << pbits);
  std::uint64_t total = 0;

#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
  for (std::int64_t i = 0; i < chunks; ++i)
    total += scan_chunk(f, occ, pbits, static_cast<std::uint64_t>(i)).models;

  return total;
}

}  // namespace dimsat
