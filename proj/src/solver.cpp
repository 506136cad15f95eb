#include "dimsat/solver.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dimsat {

std::string_view to_string(DescentMode m) {
  switch (m) {
    case DescentMode::strict: return "strict";
    case DescentMode::sideways: return "sideways";
    case DescentMode::restart: return "restart";
  }
  return "?";
}

std::string_view to_string(InitialPolarity p) {
  switch (p) {
    case InitialPolarity::all_true: return "true";
    case InitialPolarity::all_false: return "false";
    case InitialPolarity::random: return "random";
  }
  return "?";
}

std::string_view to_string(Objective o) {
  switch (o) {
    case Objective::dimensionality: return "dimensionality";
    case Objective::unsat_count: return "unsat-count";
  }
  return "?";
}

std::string_view to_string(MoveKind k) {
  switch (k) {
    case MoveKind::start: return "start";
    case MoveKind::greedy: return "greedy";
    case MoveKind::sideways: return "sideways";
    case MoveKind::restart: return "restart";
    case MoveKind::endgame: return "endgame";
  }
  return "?";
}

std::optional<DescentMode> parse_mode(std::string_view s) {
  if (s == "strict") return DescentMode::strict;
  if (s == "sideways") return DescentMode::sideways;
  if (s == "restart") return DescentMode::restart;
  return std::nullopt;
}

std::optional<InitialPolarity> parse_polarity(std::string_view s) {
  if (s == "true" || s == "all_true") return InitialPolarity::all_true;
  if (s == "false" || s == "all_false") return InitialPolarity::all_false;
  if (s == "random") return InitialPolarity::random;
  return std::nullopt;
}

std::optional<Objective> parse_objective(std::string_view s) {
  if (s == "dimensionality") return Objective::dimensionality;
  if (s == "unsat-count" || s == "unsat_count") return Objective::unsat_count;
  return std::nullopt;
}

void SolverConfig::validate() const {
  if (endgame_threshold > max_endgame_threshold)
    throw std::invalid_argument("endgame threshold must be <= 30");
  if (flip_cardinality < 1 || flip_cardinality > max_flip_cardinality)
    throw std::invalid_argument("flip cardinality must be in [1, 3]");
  if (max_iters && *max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
}

std::uint64_t Trace::max_plateau() const {
  std::uint64_t m = 0;
  for (auto len : plateau_lengths) m = std::max(m, len);
  return m;
}

void write_trace_csv(const Trace& t, std::ostream& out) {
  out << trace_csv_header << '\n';
  for (const auto& r : t.records) {
    out << r.iteration << ',' << r.dimensionality << ',' << r.unsat_count << ',';
    for (std::size_t i = 0; i < r.move.size(); ++i) {
      if (i) out << ';';
      out << r.move[i] + 1;
    }
    out << ',' << to_string(r.kind) << '\n';
  }
}

std::string trace_csv(const Trace& t) {
  std::ostringstream out;
  write_trace_csv(t, out);
  return out.str();
}

Assignment canonical_assignment(const Formula& f, InitialPolarity polarity, Rng& rng) {
  switch (polarity) {
    case InitialPolarity::all_true: return Assignment(f.num_vars, true);
    case InitialPolarity::all_false: return Assignment(f.num_vars, false);
    case InitialPolarity::random: break;
  }
  Assignment a(f.num_vars);
  for (Var v = 0; v < f.num_vars; ++v) a.set(v, coin(rng));
  return a;
}

std::int64_t score_move(ClausePartition& p, const Move& m, Objective objective) {
  const auto d = p.apply(m);
  p.apply(m);
  return objective == Objective::dimensionality ? d.dim_change() : d.unsat_change();
}

ScoredMove select_move(ClausePartition& p, const SolverConfig& cfg, Rng& rng) {
  const auto ranking = occurrence_ranking(p);
  if (ranking.empty()) throw std::logic_error("select_move on an empty left batch");

  const bool randomize = cfg.mode != DescentMode::strict;
  std::optional<ScoredMove> best;
  std::uint64_t ties = 0;

  auto consider = [&](std::vector<Var> vars) {
    Move m(std::move(vars));
    const auto d = score_move(p, m, cfg.objective);
    if (!best || d < best->delta || (d == best->delta && m.size() < best->move.size())) {
      best = ScoredMove{std::move(m), d};
      ties = 1;
    } else if (randomize && d == best->delta && m.size() == best->move.size()) {
      if (uniform_below(rng, ++ties) == 0) best = ScoredMove{std::move(m), d};
    }
  };

  for (const auto& e : ranking) consider({e.var});

  // Multi-flips only over the most frequent left variables.
  constexpr std::size_t multi_flip_pool = 8;
  const std::size_t top = std::min(multi_flip_pool, ranking.size());
  if (cfg.flip_cardinality >= 2)
    for (std::size_t i = 0; i < top; ++i)
      for (std::size_t j = i + 1; j < top; ++j) consider({ranking[i].var, ranking[j].var});
  if (cfg.flip_cardinality >= 3)
    for (std::size_t i = 0; i < top; ++i)
      for (std::size_t j = i + 1; j < top; ++j)
        for (std::size_t k = j + 1; k < top; ++k)
          consider({ranking[i].var, ranking[j].var, ranking[k].var});

  return std::move(*best);
}

EndgameResult endgame_exhaust(ClausePartition& p, std::span<const Var> vars,
                              std::uint64_t budget, const VisitFn& on_visit) {
  if (vars.size() > 62) throw std::invalid_argument("endgame subcube too large");
  EndgameResult r;
  if (budget == 0) return r;

  r.visited = 1;
  if (on_visit) on_visit(p);
  if (p.unsat_count() == 0) {
    r.model = p.assignment();
    return r;
  }

  const std::uint64_t points = std::uint64_t{1} << vars.size();
  std::uint64_t i = 1;
  for (; i < points; ++i) {
    if (r.visited == budget) break;
    p.flip(vars[static_cast<std::size_t>(__builtin_ctzll(i))]);
    ++r.visited;
    if (on_visit) on_visit(p);
    if (p.unsat_count() == 0) {
      r.model = p.assignment();
      return r;
    }
  }
  r.exhausted = i == points;

  // Undo: the last visited point differs from the start by gray(i - 1).
  const std::uint64_t last = i - 1;
  std::uint64_t offset = last ^ (last >> 1);
  while (offset) {
    p.flip(vars[static_cast<std::size_t>(__builtin_ctzll(offset))]);
    offset &= offset - 1;
  }
  return r;
}

EndgameResult endgame_exhaust(ClausePartition& p, std::uint64_t budget) {
  const auto vars = p.left_variables();
  return endgame_exhaust(p, vars, budget);
}

namespace {

std::vector<Var> changed_vars(const Assignment& a, const Assignment& b) {
  std::vector<Var> out;
  for (Var v = 0; v < a.size(); ++v)
    if (a[v] != b[v]) out.push_back(v);
  return out;
}

}  // namespace

Descent descend(const Formula& f, const SolverConfig& cfg) {
  cfg.validate();
  Descent out;
  SolveResult& res = out.result;
  Trace& trace = out.trace;

  for (const auto& c : f.clauses) {
    if (c.empty()) {
      res.status = SolveStatus::unsat_exhausted;
      return out;
    }
  }
  if (!is_normalized(f)) throw std::invalid_argument("descend requires a normalized formula");

  using clock = std::chrono::steady_clock;
  const auto started = clock::now();
  auto timed_out = [&] {
    return cfg.time_limit && clock::now() - started >= *cfg.time_limit;
  };

  Rng rng(cfg.seed);
  ClausePartition p(f, std::make_shared<const OccurrenceIndex>(f),
                    canonical_assignment(f, cfg.initial_polarity, rng));

  const std::uint64_t max_iters =
      cfg.max_iters.value_or(std::max<std::uint64_t>(1, 100ull * f.num_vars));
  const bool full_cube = cfg.endgame_threshold > 0 && f.num_vars <= cfg.endgame_threshold;
  std::vector<Var> all_vars(f.num_vars);
  for (Var v = 0; v < f.num_vars; ++v) all_vars[v] = v;

  std::uint64_t iter = 0;
  std::uint64_t segment_iters = 0;
  std::uint64_t sideways_run = 0;
  std::uint64_t sideways_budget = 0;

  auto record = [&](MoveKind kind, std::vector<Var> move) {
    trace.records.push_back({iter, p.dimensionality(), p.unsat_count(), std::move(move), kind});
  };
  auto close_plateau = [&] {
    if (sideways_run > 0) trace.plateau_lengths.push_back(sideways_run);
    sideways_run = 0;
  };
  auto finish = [&](SolveStatus status) {
    close_plateau();
    res.status = status;
    if (status == SolveStatus::sat) res.model = p.assignment();
    res.iterations = iter;
    res.final_dimensionality = p.dimensionality();
    return std::move(out);
  };

  record(MoveKind::start, {});

  while (true) {
    if (p.unsat_count() == 0) return finish(SolveStatus::sat);

    bool stuck = false;
    if (segment_iters >= max_iters || timed_out()) {
      stuck = true;
    } else if (cfg.endgame_threshold > 0 && p.dimensionality() <= cfg.endgame_threshold) {
      ++iter;
      ++segment_iters;
      close_plateau();
      const auto left = p.left_variables();
      const std::span<const Var> vars = full_cube ? std::span<const Var>(all_vars)
                                                  : std::span<const Var>(left);
      const Assignment entry = p.assignment();
      const auto eg = endgame_exhaust(p, vars, std::uint64_t{1} << vars.size());
      if (eg.model) {
        record(MoveKind::endgame, changed_vars(entry, *eg.model));
        continue;
      }
      record(MoveKind::endgame, {});
      // Only a complete enumeration of every variable certifies UNSAT.
      if (eg.exhausted && vars.size() == f.num_vars) return finish(SolveStatus::unsat_exhausted);
      stuck = true;
    } else {
      ++iter;
      ++segment_iters;
      auto sm = select_move(p, cfg, rng);
      const std::vector<Var> moved(sm.move.vars().begin(), sm.move.vars().end());
      if (sm.delta < 0) {
        close_plateau();
        p.apply(sm.move);
        record(MoveKind::greedy, moved);
      } else if (sm.delta == 0 && cfg.mode != DescentMode::strict) {
        if (sideways_run == 0)
          sideways_budget = cfg.max_sideways.value_or(10ull * p.dimensionality());
        if (sideways_run < sideways_budget) {
          p.apply(sm.move);
          ++sideways_run;
          record(MoveKind::sideways, moved);
        } else {
          stuck = true;
        }
      } else {
        stuck = true;
      }
    }

    if (stuck) {
      close_plateau();
      if (cfg.mode == DescentMode::restart && res.restarts_used < cfg.restarts && !timed_out()) {
        ++res.restarts_used;
        segment_iters = 0;
        p.reset(canonical_assignment(f, InitialPolarity::random, rng));
        record(MoveKind::restart, {});
        continue;
      }
      return finish(SolveStatus::unknown);
    }
  }
}

Descent solve(const Formula& f, const SolverConfig& cfg) {
  const auto n = normalize(f);
  return descend(n.formula, cfg);
}

Descent baseline_unsat_count_search(const Formula& f, SolverConfig cfg) {
  cfg.objective = Objective::unsat_count;
  return descend(f, cfg);
}

std::vector<Assignment> enumerate_solutions(const Formula& f, const SolverConfig& cfg,
                                            std::size_t limit) {
  if (limit < 1) throw std::invalid_argument("limit must be >= 1");
  std::vector<Assignment> models;
  Formula work = normalize(f).formula;

  while (models.size() < limit) {
    auto d = descend(work, cfg);
    if (d.result.status != SolveStatus::sat) break;
    Assignment m = std::move(*d.result.model);
    if (!is_model(f, m)) throw std::logic_error("solver returned a non-model");
    if (std::find(models.begin(), models.end(), m) != models.end())
      throw std::logic_error("blocked model returned twice");

    Clause block;
    for (Var v = 0; v < f.num_vars; ++v) block.literals.push_back(Literal{v, !m[v]});
    work.clauses.push_back(std::move(block));
    models.push_back(std::move(m));
  }
  return models;
}

namespace {

bool decisive(const Descent& d) { return d.result.status != SolveStatus::unknown; }

SolverConfig with_seed(SolverConfig cfg, std::uint64_t seed) {
  cfg.seed = seed;
  return cfg;
}

}  // namespace

Descent solve_portfolio_serial(const Formula& f, const SolverConfig& cfg, std::size_t runs) {
  if (runs == 0) throw std::invalid_argument("portfolio needs at least one run");
  std::optional<Descent> first;
  for (std::size_t i = 0; i < runs; ++i) {
    auto d = descend(f, with_seed(cfg, cfg.seed + i));
    if (decisive(d)) return d;
    if (!first) first = std::move(d);
  }
  return std::move(*first);
}

Descent solve_portfolio(const Formula& f, const SolverConfig& cfg, std::size_t runs) {
  if (runs == 0) throw std::invalid_argument("portfolio needs at least one run");
  cfg.validate();
  // descend must not throw inside the parallel region.
  const bool has_empty = std::any_of(f.clauses.begin(), f.clauses.end(),
                                     [](const Clause& c) { return c.empty(); });
  if (!has_empty && !is_normalized(f))
    throw std::invalid_argument("descend requires a normalized formula");
  std::vector<std::optional<Descent>> results(runs);
  std::atomic<std::size_t> winner{runs};
  const auto n = static_cast<std::int64_t>(runs);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    // Runs after a known winner cannot change the answer.
    if (idx > winner.load(std::memory_order_relaxed)) continue;
    auto d = descend(f, with_seed(cfg, cfg.seed + idx));
    if (decisive(d)) {
      std::size_t cur = winner.load();
      while (idx < cur && !winner.compare_exchange_weak(cur, idx)) {
      }
    }
    results[idx] = std::move(d);
  }

  const std::size_t pick = winner.load() < runs ? winner.load() : 0;
  return std::move(*results[pick]);
}

}  // namespace dimsat
