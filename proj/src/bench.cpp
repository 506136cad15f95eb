#include "dimsat/bench.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "dimsat/dimacs.hpp"
#include "dimsat/oracle.hpp"
#include "json.hpp"

namespace dimsat {

using nlohmann::json;

void BenchPlan::validate() const {
  if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
  if (configs.empty()) throw std::invalid_argument("bench plan needs at least one config");
  for (const auto& c : configs) c.config.validate();
  for (const auto& i : instances)
    if (!i.path && !i.gen) throw std::invalid_argument("instance '" + i.id + "' has no source");
}

namespace {

std::string format_ratio(double r) {
  std::ostringstream s;
  s << r;
  return s.str();
}

std::string format_ms(double ms) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << ms;
  return s.str();
}

SolverConfig config_from_json(const json& j) {
  SolverConfig c;
  if (j.contains("mode")) {
    auto m = parse_mode(j.at("mode").get<std::string>());
    if (!m) throw std::invalid_argument("unknown mode in plan");
    c.mode = *m;
  }
  if (j.contains("objective")) {
    auto o = parse_objective(j.at("objective").get<std::string>());
    if (!o) throw std::invalid_argument("unknown objective in plan");
    c.objective = *o;
  }
  if (j.contains("polarity")) {
    auto p = parse_polarity(j.at("polarity").get<std::string>());
    if (!p) throw std::invalid_argument("unknown polarity in plan");
    c.initial_polarity = *p;
  }
  if (j.contains("max_iters")) c.max_iters = j.at("max_iters").get<std::uint64_t>();
  if (j.contains("max_sideways")) c.max_sideways = j.at("max_sideways").get<std::uint64_t>();
  if (j.contains("restarts")) c.restarts = j.at("restarts").get<std::uint64_t>();
  if (j.contains("endgame_threshold"))
    c.endgame_threshold = j.at("endgame_threshold").get<std::size_t>();
  if (j.contains("flip_cardinality"))
    c.flip_cardinality = j.at("flip_cardinality").get<std::size_t>();
  c.validate();
  return c;
}

GenSpec gen_from_json(const json& j) {
  GenSpec g;
  g.num_vars = j.at("n").get<Var>();
  g.k = j.value("k", Var{3});
  g.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("m")) g.num_clauses = j.at("m").get<std::uint64_t>();
  else g.num_clauses = clauses_for_ratio(g.num_vars, j.at("ratio").get<double>());
  g.allow_duplicate_clauses = j.value("allow_duplicate_clauses", true);
  return g;
}

struct Cell {
  std::size_t instance;
  std::size_t config;
  std::uint64_t rep;
};

std::vector<Cell> cells_of(const BenchPlan& plan) {
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < plan.instances.size(); ++i)
    for (std::size_t c = 0; c < plan.configs.size(); ++c)
      for (std::uint64_t r = 0; r < plan.repetitions; ++r) cells.push_back({i, c, r});
  return cells;
}

struct Loaded {
  std::optional<Formula> formula;  // normalized
  std::string error;
};

std::vector<Loaded> load_all(const BenchPlan& plan) {
  std::vector<Loaded> out(plan.instances.size());
  for (std::size_t i = 0; i < plan.instances.size(); ++i) {
    try {
      out[i].formula = normalize(load_instance(plan.instances[i])).formula;
    } catch (const std::exception& e) {
      out[i].error = e.what();
    }
  }
  return out;
}

BenchRow run_cell(const BenchPlan& plan, const std::vector<Loaded>& loaded, const Cell& cell) {
  const auto& src = plan.instances[cell.instance];
  const auto& named = plan.configs[cell.config];
  BenchRow row;
  row.instance = src.id;
  row.group = src.group.empty() ? src.id : src.group;
  row.config = named.id;
  row.seed = plan.seed + cell.rep;

  const auto& ld = loaded[cell.instance];
  if (!ld.formula) {
    row.error = ld.error;
    return row;
  }
  try {
    SolverConfig cfg = named.config;
    cfg.seed = row.seed;
    if (plan.time_budget) cfg.time_limit = plan.time_budget;

    const auto t0 = std::chrono::steady_clock::now();
    const auto d = descend(*ld.formula, cfg);
    const auto t1 = std::chrono::steady_clock::now();

    if (d.result.status == SolveStatus::sat && !is_model(*ld.formula, *d.result.model))
      throw std::logic_error("model failed verification");

    row.status = d.result.status;
    row.iterations = d.result.iterations;
    row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    row.dim_initial = d.trace.records.empty() ? 0 : d.trace.records.front().dimensionality;
    row.dim_final = d.result.final_dimensionality;
    row.max_plateau = d.trace.max_plateau();

    if (plan.write_traces && plan.output_dir) {
      const auto dir = *plan.output_dir / "traces";
      std::filesystem::create_directories(dir);
      std::ofstream t(dir / (src.id + "__" + named.id + "__r" + std::to_string(cell.rep) + ".csv"));
      write_trace_csv(d.trace, t);
    }
  } catch (const std::exception& e) {
    row.status = SolveStatus::unknown;
    row.error = e.what();
  }
  return row;
}

}  // namespace

std::vector<InstanceSource> ratio_ensemble(Var num_vars, Var k, std::span<const double> ratios,
                                           std::size_t per_ratio, std::uint64_t seed) {
  std::vector<InstanceSource> out;
  std::uint64_t next_seed = seed;
  for (double r : ratios) {
    const std::string group = "n" + std::to_string(num_vars) + "_r" + format_ratio(r);
    for (std::size_t i = 0; i < per_ratio; ++i) {
      GenSpec g;
      g.num_vars = num_vars;
      g.k = k;
      g.num_clauses = clauses_for_ratio(num_vars, r);
      g.seed = next_seed++;
      g.validate();
      std::ostringstream id;
      id << group << "_i" << std::setw(3) << std::setfill('0') << i;
      out.push_back({id.str(), group, std::nullopt, g});
    }
  }
  return out;
}

BenchPlan parse_bench_plan(std::string_view json_text) {
  const json j = json::parse(json_text);
  BenchPlan plan;
  plan.repetitions = j.value("repetitions", std::uint64_t{1});
  plan.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("time_budget_ms"))
    plan.time_budget = std::chrono::milliseconds(j.at("time_budget_ms").get<std::int64_t>());
  if (j.contains("output_dir"))
    plan.output_dir = std::filesystem::path(j.at("output_dir").get<std::string>());
  plan.write_traces = j.value("traces", false);
  plan.deterministic = j.value("deterministic", false);

  for (const auto& inst : j.at("instances")) {
    if (inst.contains("file")) {
      std::filesystem::path p = inst.at("file").get<std::string>();
      std::string id = inst.value("id", p.stem().string());
      plan.instances.push_back({id, inst.value("group", id), p, std::nullopt});
    } else if (inst.contains("gen")) {
      const GenSpec g = gen_from_json(inst.at("gen"));
      std::string id = inst.value("id", "gen_n" + std::to_string(g.num_vars) + "_m" +
                                            std::to_string(g.num_clauses) + "_s" +
                                            std::to_string(g.seed));
      plan.instances.push_back({id, inst.value("group", id), std::nullopt, g});
    } else if (inst.contains("ensemble")) {
      const auto& e = inst.at("ensemble");
      const auto ratios = e.at("ratios").get<std::vector<double>>();
      auto ens = ratio_ensemble(e.at("n").get<Var>(), e.value("k", Var{3}), ratios,
                                e.value("count", std::size_t{10}),
                                e.value("seed", std::uint64_t{0}));
      plan.instances.insert(plan.instances.end(), ens.begin(), ens.end());
    } else {
      throw std::invalid_argument("plan instance needs 'file', 'gen' or 'ensemble'");
    }
  }

  for (const auto& c : j.at("configs")) {
    plan.configs.push_back({c.at("id").get<std::string>(), config_from_json(c)});
  }
  plan.validate();
  return plan;
}

BenchPlan load_bench_plan(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open plan '" + file.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_bench_plan(buf.str());
}

Formula load_instance(const InstanceSource& src) {
  if (src.path) return parse_dimacs_file(src.path->string());
  if (src.gen) return gen_random_ksat(*src.gen);
  throw std::invalid_argument("instance '" + src.id + "' has no source");
}

std::vector<BenchRow> run_bench_serial(const BenchPlan& plan) {
  plan.validate();
  const auto loaded = load_all(plan);
  std::vector<BenchRow> rows;
  for (const auto& cell : cells_of(plan)) rows.push_back(run_cell(plan, loaded, cell));
  return rows;
}

std::vector<BenchRow> run_bench(const BenchPlan& plan) {
  plan.validate();
  const auto loaded = load_all(plan);
  const auto cells = cells_of(plan);
  std::vector<BenchRow> rows(cells.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(cells.size()); ++i)
    rows[static_cast<std::size_t>(i)] = run_cell(plan, loaded, cells[static_cast<std::size_t>(i)]);

  return rows;
}

void write_summary_csv(const std::vector<BenchRow>& rows, bool deterministic,
                       std::ostream& out) {
  out << summary_csv_header << '\n';
  for (const auto& r : rows) {
    out << r.instance << ',' << r.config << ',' << r.seed << ',' << to_string(r.status) << ','
        << r.iterations << ',' << (deterministic ? std::string("0") : format_ms(r.wall_ms))
        << ',' << r.dim_initial << ',' << r.dim_final << ',' << r.max_plateau << '\n';
  }
}

std::vector<GroupStat> summarize_groups(const BenchPlan& plan, const std::vector<BenchRow>& rows,
                                        bool with_oracle) {
  std::vector<GroupStat> stats;
  std::map<std::pair<std::string, std::string>, std::size_t> index;
  for (const auto& r : rows) {
    auto [it, fresh] = index.try_emplace({r.group, r.config}, stats.size());
    if (fresh) {
      GroupStat g;
      g.group = r.group;
      g.config = r.config;
      stats.push_back(std::move(g));
    }
    auto& s = stats[it->second];
    ++s.runs;
    if (r.status == SolveStatus::sat) ++s.sat;
    else if (r.status == SolveStatus::unsat_exhausted) ++s.unsat;
    else ++s.unknown;
  }
  if (!with_oracle) return stats;

  std::map<std::string, std::pair<std::size_t, std::size_t>> labels;  // group -> (sat, total)
  for (const auto& src : plan.instances) {
    const std::string group = src.group.empty() ? src.id : src.group;
    try {
      const Formula f = load_instance(src);
      if (f.num_vars > brute_force_cap) continue;
      auto& l = labels[group];
      l.first += brute_force_solve(f).sat;
      ++l.second;
    } catch (const std::exception&) {
    }
  }
  for (auto& s : stats) {
    auto it = labels.find(s.group);
    if (it != labels.end() && it->second.second > 0)
      s.oracle_sat_rate = static_cast<double>(it->second.first) / it->second.second;
  }
  return stats;
}

void write_bench_outputs(const BenchPlan& plan, const std::vector<BenchRow>& rows) {
  if (!plan.output_dir) return;
  std::filesystem::create_directories(*plan.output_dir);
  std::ofstream summary(*plan.output_dir / "summary.csv");
  write_summary_csv(rows, plan.deterministic, summary);
  std::ofstream errors(*plan.output_dir / "errors.log");
  for (const auto& r : rows)
    if (!r.error.empty())
      errors << r.instance << ',' << r.config << ',' << r.seed << ": " << r.error << '\n';
}

}  // namespace dimsat
