// dimsat: command-line frontend.
//
//   dimsat solve <file.cnf>      print a certificate, exit 10 / 20 / 0
//   dimsat trace <file.cnf>      print the descent trace as CSV
//   dimsat gen -n 20 -m 85       write a random k-SAT instance
//   dimsat bench ...             run a benchmark plan, write summary CSV

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dimsat/bench.hpp"
#include "dimsat/dimacs.hpp"
#include "dimsat/generator.hpp"
#include "dimsat/oracle.hpp"
#include "dimsat/solver.hpp"
#include "json.hpp"

namespace {

using namespace dimsat;

constexpr int exit_parse_error = 1;
constexpr int exit_usage = 2;

struct SolverFlags {
  std::string mode = "restart";
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> max_iters;
  std::optional<std::uint64_t> max_sideways;
  std::uint64_t restarts = 10;
  std::size_t endgame_threshold = 20;
  std::size_t flip_cardinality = 1;
  std::string polarity = "true";
  std::string objective = "dimensionality";

  void add_to(CLI::App* app) {
    app->add_option("--mode", mode, "descent mode")
        ->check(CLI::IsMember({"strict", "sideways", "restart"}));
    app->add_option("--seed", seed, "random seed (default: $DIMSAT_SEED or 0)");
    app->add_option("--max-iters", max_iters, "iterations per descent (default 100*vars)");
    app->add_option("--max-sideways", max_sideways,
                    "sideways moves per plateau (default 10*dimensionality)");
    app->add_option("--restarts", restarts, "restart budget in restart mode");
    app->add_option("--endgame-threshold", endgame_threshold,
                    "exhaust the subcube at or below this dimensionality (0 disables)");
    app->add_option("--flip-cardinality", flip_cardinality, "largest multi-flip move (1-3)");
    app->add_option("--polarity", polarity, "initial assignment")
        ->check(CLI::IsMember({"true", "false", "random"}));
    app->add_option("--objective", objective, "move scoring")
        ->check(CLI::IsMember({"dimensionality", "unsat-count"}));
  }

  SolverConfig config() const {
    SolverConfig c;
    c.mode = *parse_mode(mode);
    c.max_iters = max_iters;
    c.max_sideways = max_sideways;
    c.restarts = restarts;
    c.endgame_threshold = endgame_threshold;
    c.flip_cardinality = flip_cardinality;
    c.initial_polarity = *parse_polarity(polarity);
    c.objective = *parse_objective(objective);
    c.seed = resolved_seed();
    c.validate();
    return c;
  }

  std::uint64_t resolved_seed() const {
    if (seed) return *seed;
    if (const char* env = std::getenv("DIMSAT_SEED")) {
      try {
        return std::stoull(env);
      } catch (const std::exception&) {
        throw std::invalid_argument("DIMSAT_SEED is not an unsigned integer");
      }
    }
    return 0;
  }
};

Formula read_formula(const std::string& path) {
  if (path == "-") {
    Formula f = parse_dimacs(std::cin);
    f.source_name = "<stdin>";
    return f;
  }
  return parse_dimacs_file(path);
}

std::string result_json(const SolveResult& r) {
  nlohmann::json j;
  j["status"] = std::string(to_string(r.status));
  if (r.model) {
    std::vector<std::int64_t> lits;
    for (Var v = 0; v < r.model->size(); ++v)
      lits.push_back((*r.model)[v] ? std::int64_t(v) + 1 : -(std::int64_t(v) + 1));
    j["model"] = lits;
  } else {
    j["model"] = nullptr;
  }
  j["iterations"] = r.iterations;
  j["restarts"] = r.restarts_used;
  j["final_dimensionality"] = r.final_dimensionality;
  return j.dump() + "\n";
}

int cmd_solve(const std::string& path, const SolverFlags& flags, const std::string& trace_path,
              const std::string& format, std::size_t portfolio) {
  const Formula f = read_formula(path);
  const SolverConfig cfg = flags.config();
  const Formula norm = normalize(f).formula;
  const Descent d = portfolio > 1 ? solve_portfolio(norm, cfg, portfolio) : descend(norm, cfg);

  if (d.result.status == SolveStatus::sat && !is_model(f, *d.result.model))
    throw std::logic_error("internal error: model failed verification");

  if (!trace_path.empty()) {
    std::ofstream t(trace_path);
    if (!t) throw std::runtime_error("cannot write trace '" + trace_path + "'");
    write_trace_csv(d.trace, t);
  }
  std::cout << (format == "json" ? result_json(d.result) : emit_certificate(d.result));
  return exit_code(d.result.status);
}

int cmd_trace(const std::string& path, const SolverFlags& flags, const std::string& out_path) {
  const Formula f = normalize(read_formula(path)).formula;
  const Descent d = descend(f, flags.config());
  if (out_path.empty()) {
    write_trace_csv(d.trace, std::cout);
  } else {
    std::ofstream t(out_path);
    if (!t) throw std::runtime_error("cannot write trace '" + out_path + "'");
    write_trace_csv(d.trace, t);
  }
  return 0;
}

struct GenFlags {
  Var n = 0;
  std::optional<std::uint64_t> m;
  std::optional<double> ratio;
  Var k = 3;
  std::optional<std::uint64_t> seed;
  bool no_duplicates = false;
  std::size_t count = 1;
  std::string output;
};

int cmd_gen(const GenFlags& g) {
  GenSpec spec;
  spec.num_vars = g.n;
  spec.k = g.k;
  spec.allow_duplicate_clauses = !g.no_duplicates;
  SolverFlags seed_src;
  seed_src.seed = g.seed;
  spec.seed = seed_src.resolved_seed();
  if (g.m && g.ratio) throw std::invalid_argument("use either -m or --ratio");
  if (g.m) spec.num_clauses = *g.m;
  else if (g.ratio) spec.num_clauses = clauses_for_ratio(g.n, *g.ratio);
  else throw std::invalid_argument("one of -m or --ratio is required");
  spec.validate();
  if (g.count < 1) throw std::invalid_argument("--count must be >= 1");

  if (g.count == 1) {
    const std::string text = serialize_dimacs(gen_random_ksat(spec), {gen_comment(spec)});
    if (g.output.empty() || g.output == "-") {
      std::cout << text;
    } else {
      std::ofstream out(g.output);
      if (!out) throw std::runtime_error("cannot write '" + g.output + "'");
      out << text;
    }
    return 0;
  }

  if (g.output.empty()) throw std::invalid_argument("--count > 1 needs -o <directory>");
  std::filesystem::create_directories(g.output);
  for (std::size_t i = 0; i < g.count; ++i) {
    GenSpec s = spec;
    s.seed = spec.seed + i;
    const auto name = "gen_n" + std::to_string(s.num_vars) + "_m" +
                      std::to_string(s.num_clauses) + "_k" + std::to_string(s.k) + "_s" +
                      std::to_string(s.seed) + ".cnf";
    std::ofstream out(std::filesystem::path(g.output) / name);
    out << serialize_dimacs(gen_random_ksat(s), {gen_comment(s)});
  }
  return 0;
}

struct BenchFlags {
  std::string plan;
  std::vector<std::string> files;
  Var ensemble_n = 0;
  Var ensemble_k = 3;
  std::vector<double> ratios;
  std::size_t per_ratio = 10;
  std::uint64_t gen_seed = 1;
  std::vector<std::string> objectives{"dimensionality"};
  std::uint64_t reps = 1;
  std::optional<std::int64_t> time_budget_ms;
  std::string out;
  bool traces = false;
  bool deterministic = false;
  bool oracle = false;
};

void print_groups(const std::vector<GroupStat>& stats, std::ostream& os) {
  os << "group,config,runs,sat,unsat,unknown,sat_rate,oracle_sat_rate\n";
  for (const auto& s : stats) {
    os << s.group << ',' << s.config << ',' << s.runs << ',' << s.sat << ',' << s.unsat << ','
       << s.unknown << ',' << std::fixed << std::setprecision(3) << s.sat_rate() << ',';
    if (s.oracle_sat_rate) os << *s.oracle_sat_rate;
    os << '\n' << std::defaultfloat;
  }
}

int cmd_bench(const BenchFlags& b, const SolverFlags& flags) {
  BenchPlan plan;
  if (!b.plan.empty()) {
    plan = load_bench_plan(b.plan);
  } else {
    for (const auto& file : b.files) {
      const std::string id = std::filesystem::path(file).stem().string();
      plan.instances.push_back({id, id, std::filesystem::path(file), std::nullopt});
    }
    if (b.ensemble_n > 0) {
      if (b.ratios.empty()) throw std::invalid_argument("--ensemble-n needs --ratios");
      auto ens = ratio_ensemble(b.ensemble_n, b.ensemble_k, b.ratios, b.per_ratio, b.gen_seed);
      plan.instances.insert(plan.instances.end(), ens.begin(), ens.end());
    }
    const SolverConfig base = flags.config();
    for (const auto& o : b.objectives) {
      auto obj = parse_objective(o);
      if (!obj) throw std::invalid_argument("unknown objective '" + o + "'");
      SolverConfig c = base;
      c.objective = *obj;
      plan.configs.push_back({std::string(to_string(c.mode)) + "-" + o, c});
    }
    plan.repetitions = b.reps;
    plan.seed = flags.resolved_seed();
    if (b.time_budget_ms) plan.time_budget = std::chrono::milliseconds(*b.time_budget_ms);
    if (!b.out.empty()) plan.output_dir = b.out;
    plan.write_traces = b.traces;
    plan.deterministic = b.deterministic;
  }
  if (b.deterministic) plan.deterministic = true;
  if (!b.out.empty()) plan.output_dir = b.out;
  if (b.traces) plan.write_traces = true;
  if (plan.instances.empty()) throw std::invalid_argument("bench plan has no instances");
  plan.validate();

  const auto rows = run_bench(plan);
  for (const auto& r : rows)
    if (!r.error.empty())
      std::cerr << "c run failed: " << r.instance << " " << r.config << " seed " << r.seed
                << ": " << r.error << "\n";

  const auto groups = summarize_groups(plan, rows, b.oracle);
  if (plan.output_dir) {
    write_bench_outputs(plan, rows);
    print_groups(groups, std::cout);
  } else {
    write_summary_csv(rows, plan.deterministic, std::cout);
    print_groups(groups, std::cerr);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dimsat: dimensionality-descent local search for CNF"};
  app.require_subcommand(1);

  SolverFlags solver_flags;
  std::string path;
  std::string trace_path;
  std::string format = "text";
  std::size_t portfolio = 1;

  auto* solve = app.add_subcommand("solve", "solve a DIMACS CNF file");
  solve->add_option("file", path, "DIMACS file, '-' for stdin")->required();
  solver_flags.add_to(solve);
  solve->add_option("--trace", trace_path, "write the descent trace CSV here");
  solve->add_option("--format", format, "result format")->check(CLI::IsMember({"text", "json"}));
  solve->add_option("--portfolio", portfolio, "independent seeded runs, first decisive wins");

  SolverFlags trace_flags;
  std::string trace_file;
  std::string trace_out;
  auto* trace = app.add_subcommand("trace", "print the descent trace of a DIMACS file as CSV");
  trace->add_option("file", trace_file, "DIMACS file, '-' for stdin")->required();
  trace_flags.add_to(trace);
  trace->add_option("--trace,-o", trace_out, "write the CSV here instead of stdout");

  GenFlags gen_flags;
  auto* gen = app.add_subcommand("gen", "generate random k-SAT in DIMACS");
  gen->add_option("-n", gen_flags.n, "variables")->required();
  gen->add_option("-m", gen_flags.m, "clauses");
  gen->add_option("--ratio", gen_flags.ratio, "clauses per variable (m = round(ratio*n))");
  gen->add_option("-k", gen_flags.k, "clause width");
  gen->add_option("--seed", gen_flags.seed, "random seed (default: $DIMSAT_SEED or 0)");
  gen->add_flag("--no-duplicates", gen_flags.no_duplicates, "forbid repeated clauses");
  gen->add_option("--count", gen_flags.count, "number of instances (seeds seed..seed+count-1)");
  gen->add_option("-o,--output", gen_flags.output, "output file, or directory with --count");

  BenchFlags bench_flags;
  SolverFlags bench_solver;
  auto* bench = app.add_subcommand("bench", "run a benchmark plan");
  bench->add_option("--plan", bench_flags.plan, "JSON plan file");
  bench->add_option("--files", bench_flags.files, "DIMACS instances");
  bench->add_option("--ensemble-n", bench_flags.ensemble_n, "generate random instances with n vars");
  bench->add_option("--ensemble-k", bench_flags.ensemble_k, "clause width of generated instances");
  bench->add_option("--ratios", bench_flags.ratios, "clause/variable ratios")->delimiter(',');
  bench->add_option("--per-ratio", bench_flags.per_ratio, "instances per ratio");
  bench->add_option("--gen-seed", bench_flags.gen_seed, "first generator seed");
  bench->add_option("--objectives", bench_flags.objectives, "objectives to compare")
      ->delimiter(',');
  bench->add_option("--reps", bench_flags.reps, "repetitions per (instance, config)");
  bench->add_option("--time-budget-ms", bench_flags.time_budget_ms, "time limit per run");
  bench->add_option("--out", bench_flags.out, "output directory");
  bench->add_flag("--traces", bench_flags.traces, "write per-run trace CSVs");
  bench->add_flag("--deterministic", bench_flags.deterministic, "write wall_ms as 0");
  bench->add_flag("--oracle", bench_flags.oracle, "label instances with the brute-force oracle");
  bench_solver.add_to(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_usage;
  }

  try {
    if (*solve) return cmd_solve(path, solver_flags, trace_path, format, portfolio);
    if (*trace) return cmd_trace(trace_file, trace_flags, trace_out);
    if (*gen) return cmd_gen(gen_flags);
    if (*bench) return cmd_bench(bench_flags, bench_solver);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_parse_error;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_parse_error;
  }
  return exit_usage;
}
