#pragma once

// Dimensionality descent: start from a canonical assignment, repeatedly flip
// the left-batch variables that shrink the set of variables still involved
// in falsified clauses, and finish small subcubes by exhaustive Gray-code
// enumeration.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dimsat/cnf.hpp"
#include "dimsat/partition.hpp"
#include "dimsat/result.hpp"
#include "dimsat/rng.hpp"

namespace dimsat {

enum class DescentMode { strict, sideways, restart };
enum class InitialPolarity { all_true, all_false, random };
enum class Objective { dimensionality, unsat_count };

std::string_view to_string(DescentMode m);
std::string_view to_string(InitialPolarity p);
std::string_view to_string(Objective o);
std::optional<DescentMode> parse_mode(std::string_view s);
std::optional<InitialPolarity> parse_polarity(std::string_view s);
std::optional<Objective> parse_objective(std::string_view s);

struct SolverConfig {
  static constexpr std::size_t max_endgame_threshold = 30;
  static constexpr std::size_t max_flip_cardinality = 3;

  DescentMode mode = DescentMode::restart;
  std::optional<std::uint64_t> max_iters;     // per descent segment; default 100 * num_vars
  std::optional<std::uint64_t> max_sideways;  // default 10 * dimensionality at plateau entry
  std::uint64_t restarts = 10;
  std::size_t endgame_threshold = 20;  // 0 disables the endgame
  std::size_t flip_cardinality = 1;
  std::uint64_t seed = 0;
  InitialPolarity initial_polarity = InitialPolarity::all_true;
  Objective objective = Objective::dimensionality;
  std::optional<std::chrono::milliseconds> time_limit;

  // Throws std::invalid_argument.
  void validate() const;
};

enum class MoveKind { start, greedy, sideways, restart, endgame };
std::string_view to_string(MoveKind k);

struct TraceRecord {
  std::uint64_t iteration = 0;
  std::size_t dimensionality = 0;
  std::size_t unsat_count = 0;
  std::vector<Var> move;  // 0-based; empty for start/restart
  MoveKind kind = MoveKind::start;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct Trace {
  std::vector<TraceRecord> records;
  // Lengths of maximal runs of accepted non-improving moves.
  std::vector<std::uint64_t> plateau_lengths;

  std::uint64_t max_plateau() const;
  friend bool operator==(const Trace&, const Trace&) = default;
};

inline constexpr std::string_view trace_csv_header =
    "iteration,dimensionality,unsat_count,move_vars,move_kind";

// Variables are written 1-based, semicolon-joined.
void write_trace_csv(const Trace& t, std::ostream& out);
std::string trace_csv(const Trace& t);

struct Descent {
  SolveResult result;
  Trace trace;
};

Assignment canonical_assignment(const Formula& f, InitialPolarity polarity, Rng& rng);

// Objective change of applying `m`: negative is an improvement. The
// partition is restored before returning.
std::int64_t score_move(ClausePartition& p, const Move& m,
                        Objective objective = Objective::dimensionality);

struct ScoredMove {
  Move move;
  std::int64_t delta;
};

// Best candidate among single flips of every left-batch variable and, when
// flip_cardinality > 1, multi-flips over the top of the occurrence ranking.
// Ties prefer smaller moves, then ranking order; in sideways and restart
// modes ties at equal cardinality are broken by `rng`.
// Precondition: dimensionality > 0.
ScoredMove select_move(ClausePartition& p, const SolverConfig& cfg, Rng& rng);

struct EndgameResult {
  std::optional<Assignment> model;
  bool exhausted = false;
  std::uint64_t visited = 0;  // assignments examined, including the start
};

using VisitFn = std::function<void(const ClausePartition&)>;

// Enumerates all 2^|vars| assignments of `vars` (others fixed) in Gray-code
// order starting from the current state. On a model the partition is left
// at that model; otherwise it is restored to the entry state. Stops without
// exhausting once `budget` assignments have been visited. `on_visit` sees
// every visited state including the start.
EndgameResult endgame_exhaust(ClausePartition& p, std::span<const Var> vars,
                              std::uint64_t budget, const VisitFn& on_visit = {});
// Subcube over the current left-batch variables.
EndgameResult endgame_exhaust(ClausePartition& p, std::uint64_t budget);

// Requires a normalized formula. A formula with an empty clause yields
// unsat_exhausted immediately.
Descent descend(const Formula& f, const SolverConfig& cfg);

// Normalizes first, then descends. The model refers to the original
// variable numbering (normalization never renumbers).
Descent solve(const Formula& f, const SolverConfig& cfg);

// Same loop with moves scored by the change in falsified clause count.
Descent baseline_unsat_count_search(const Formula& f, SolverConfig cfg);

// Solves repeatedly, blocking each model found, until `limit` models, an
// UNSAT proof, or an unknown result. Models are distinct and verified.
std::vector<Assignment> enumerate_solutions(const Formula& f, const SolverConfig& cfg,
                                            std::size_t limit);

// Runs `runs` independent descents with seeds cfg.seed + i and returns the
// lowest-index decisive run (run 0 when none is decisive). The parallel
// version returns the same result as the serial one.
Descent solve_portfolio(const Formula& f, const SolverConfig& cfg, std::size_t runs);
Descent solve_portfolio_serial(const Formula& f, const SolverConfig& cfg, std::size_t runs);

}  // namespace dimsat
