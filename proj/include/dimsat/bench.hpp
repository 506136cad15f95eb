#pragma once

// Batch experiment harness. Each (instance, config, repetition) cell is an
// independent solver run; cells run in parallel and rows come back in plan
// order.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dimsat/generator.hpp"
#include "dimsat/result.hpp"
#include "dimsat/solver.hpp"

namespace dimsat {

struct InstanceSource {
  std::string id;
  std::string group;  // rows are aggregated per group; defaults to id
  std::optional<std::filesystem::path> path;
  std::optional<GenSpec> gen;
};

struct NamedConfig {
  std::string id;
  SolverConfig config;
};

struct BenchPlan {
  std::vector<InstanceSource> instances;
  std::vector<NamedConfig> configs;
  std::uint64_t repetitions = 1;
  std::uint64_t seed = 0;  // run seed = seed + repetition index
  std::optional<std::chrono::milliseconds> time_budget;
  std::optional<std::filesystem::path> output_dir;
  bool write_traces = false;
  bool deterministic = false;  // write wall_ms as 0

  void validate() const;
};

struct BenchRow {
  std::string instance;
  std::string group;
  std::string config;
  std::uint64_t seed = 0;
  SolveStatus status = SolveStatus::unknown;
  std::uint64_t iterations = 0;
  double wall_ms = 0;
  std::size_t dim_initial = 0;
  std::size_t dim_final = 0;
  std::uint64_t max_plateau = 0;
  std::string error;  // empty unless the run failed
};

inline constexpr std::string_view summary_csv_header =
    "instance,config,seed,status,iterations,wall_ms,dim_initial,dim_final,max_plateau";

// `n` instances per ratio, ids "n<n>_r<ratio>_i<index>", grouped per ratio.
std::vector<InstanceSource> ratio_ensemble(Var num_vars, Var k, std::span<const double> ratios,
                                           std::size_t per_ratio, std::uint64_t seed);

BenchPlan load_bench_plan(const std::filesystem::path& file);
BenchPlan parse_bench_plan(std::string_view json_text);

Formula load_instance(const InstanceSource& src);

// Never throws for a failing run; the row carries status unknown and an
// error note instead.
std::vector<BenchRow> run_bench(const BenchPlan& plan);
std::vector<BenchRow> run_bench_serial(const BenchPlan& plan);

void write_summary_csv(const std::vector<BenchRow>& rows, bool deterministic,
                       std::ostream& out);

struct GroupStat {
  std::string group;
  std::string config;
  std::size_t runs = 0;
  std::size_t sat = 0;
  std::size_t unsat = 0;
  std::size_t unknown = 0;
  std::optional<double> oracle_sat_rate;  // over distinct instances

  double sat_rate() const { return runs ? static_cast<double>(sat) / runs : 0.0; }
};

// One entry per (group, config) in first-seen order. With `with_oracle`,
// instances within the brute-force cap are labeled exhaustively.
std::vector<GroupStat> summarize_groups(const BenchPlan& plan, const std::vector<BenchRow>& rows,
                                        bool with_oracle);

// Writes summary.csv, errors.log and traces into plan.output_dir.
void write_bench_outputs(const BenchPlan& plan, const std::vector<BenchRow>& rows);

}  // namespace dimsat
