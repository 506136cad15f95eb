#pragma once

// Left/right clause batches under the current assignment.
//
// The left batch holds the falsified clauses, the right batch the satisfied
// ones. Dimensionality is the number of distinct variables occurring in the
// left batch. All counters are maintained incrementally under flips at
// O(occurrences of the flipped variable * clause width) cost.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "dimsat/cnf.hpp"

namespace dimsat {

struct Occurrence {
  std::uint32_t clause;
  bool positive;
};

// Per-variable occurrence lists in CSR layout. Shared read-only between
// partitions over the same formula.
class OccurrenceIndex {
 public:
  explicit OccurrenceIndex(const Formula& f);

  std::span<const Occurrence> of(Var v) const {
    return {entries_.data() + offsets_[v], entries_.data() + offsets_[v + 1]};
  }

 private:
  std::vector<std::uint32_t> offsets_;
  std::vector<Occurrence> entries_;
};

// A nonempty set of variables flipped together. Stored sorted.
class Move {
 public:
  explicit Move(std::vector<Var> vars);
  static Move single(Var v) { return Move(std::vector<Var>{v}); }

  std::span<const Var> vars() const { return vars_; }
  std::size_t size() const { return vars_.size(); }

  friend bool operator==(const Move&, const Move&) = default;
  friend auto operator<=>(const Move&, const Move&) = default;

 private:
  std::vector<Var> vars_;
};

struct FlipDelta {
  Var var = 0;
  std::uint32_t made = 0;    // clauses moved left -> right
  std::uint32_t broken = 0;  // clauses moved right -> left
  std::size_t dim_before = 0;
  std::size_t dim_after = 0;
};

struct MoveDelta {
  std::uint32_t made = 0;
  std::uint32_t broken = 0;
  std::size_t dim_before = 0;
  std::size_t dim_after = 0;
  std::size_t unsat_before = 0;
  std::size_t unsat_after = 0;

  std::int64_t dim_change() const {
    return static_cast<std::int64_t>(dim_after) - static_cast<std::int64_t>(dim_before);
  }
  std::int64_t unsat_change() const {
    return static_cast<std::int64_t>(unsat_after) - static_cast<std::int64_t>(unsat_before);
  }
};

// The formula must be normalized and must outlive the partition.
class ClausePartition {
 public:
  // Full-scan build. Throws std::invalid_argument on a length mismatch or
  // a formula that is not normalized.
  ClausePartition(const Formula& f, Assignment a);
  ClausePartition(const Formula& f, std::shared_ptr<const OccurrenceIndex> occ,
                  Assignment a);

  // Rebuilds all counters for a new assignment, keeping the occurrence index.
  void reset(Assignment a);

  FlipDelta flip(Var v);
  MoveDelta apply(const Move& m);

  const Formula& formula() const { return *formula_; }
  const Assignment& assignment() const { return assignment_; }
  Var num_vars() const { return formula_->num_vars; }

  std::size_t dimensionality() const { return left_vars_.size(); }
  std::size_t unsat_count() const { return unsat_.size(); }
  bool is_unsat(std::size_t c) const { return unsat_pos_[c] != npos; }
  std::uint32_t sat_true_count(std::size_t c) const { return true_count_[c]; }
  std::uint32_t left_occurrence(Var v) const { return left_occ_[v]; }
  std::span<const Occurrence> occurrences(Var v) const { return occ_->of(v); }

  // Left batch clause indices, in unspecified order.
  std::span<const std::uint32_t> unsat_clauses() const { return unsat_; }
  // Variables with left_occurrence > 0, ascending.
  std::vector<Var> left_variables() const;

  // Same assignment, batches and counters (batch order is not compared).
  bool same_state(const ClausePartition& other) const;

 private:
  static constexpr std::uint32_t npos = ~std::uint32_t{0};

  void make_left(std::uint32_t c);
  void make_right(std::uint32_t c);

  const Formula* formula_;
  std::shared_ptr<const OccurrenceIndex> occ_;
  Assignment assignment_;
  std::vector<std::uint32_t> true_count_;
  std::vector<std::uint32_t> unsat_;
  std::vector<std::uint32_t> unsat_pos_;
  std::vector<std::uint32_t> left_occ_;
  std::vector<Var> left_vars_;
  std::vector<std::uint32_t> left_var_pos_;
};

inline ClausePartition build_partition(const Formula& f, Assignment a) {
  return ClausePartition(f, std::move(a));
}

struct RankEntry {
  Var var;
  std::uint32_t count;
  friend bool operator==(const RankEntry&, const RankEntry&) = default;
};

// Left-batch variables by descending left occurrence, ascending index on ties.
std::vector<RankEntry> occurrence_ranking(const ClausePartition& p);

// Compares the incrementally maintained state against a scratch rebuild.
bool rebuild_check(const ClausePartition& p, const Formula& f);

// Number of nonempty flip-sets over n variables, 2^n - 1. Exact for
// n <= 64; saturates at UINT64_MAX beyond.
std::uint64_t count_transitions(std::size_t n);

}  // namespace dimsat
