#include "gchlab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "json.hpp"

#include "gchlab/config.hpp"
#include "gchlab/criteria.hpp"
#include "gchlab/csv.hpp"
#include "gchlab/dp.hpp"
#include "gchlab/dynamics.hpp"
#include "gchlab/initial.hpp"
#include "gchlab/kernels.hpp"
#include "gchlab/mollify.hpp"

namespace gchlab::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_blowup = 2;
constexpr int exit_numerical = 3;
constexpr int exit_config = 4;

// Epsilon used wherever a slope-threshold record is attached to a report;
// the config schema carries no epsilon knob.
constexpr double default_epsilon = 1.0;

json meta_base(const std::string& command, const RunConfig& cfg) {
  return json{{"schema_version", 1},
              {"command", command},
              {"config", json::parse(config_to_json(cfg))}};
}

void write_json(const fs::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

json threshold_to_json(const ThresholdRecord& rec) {
  json j{{"epsilon", rec.epsilon},
         {"min_slope", rec.min_slope},
         {"rhs_threshold", rec.rhs_threshold},
         {"satisfied", rec.satisfied}};
  j["t_star"] = rec.t_star ? json(*rec.t_star) : json();
  return j;
}

/// Threshold evaluation on v0 = 2 (2 - dx) u0; null for degenerate data.
json threshold_block(const Field& u0, BackendKind backend) {
  try {
    ClassificationReport rep =
        classify_initial(u0, backend, default_epsilon);
    return threshold_to_json(*rep.threshold34);
  } catch (const std::invalid_argument&) {
    return json();
  }
}

int status_exit_code(RunStatus status) {
  switch (status) {
    case RunStatus::Completed: return exit_ok;
    case RunStatus::BlowUpDetected: return exit_blowup;
    case RunStatus::StepFloorReached: return exit_numerical;
  }
  return exit_numerical;
}

std::vector<double> uniform_times(double t_end, int segments) {
  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(segments) + 1);
  for (int k = 0; k <= segments; ++k) times.push_back(t_end * k / segments);
  times.back() = t_end;
  return times;
}

int cmd_solve(const RunConfig& cfg) {
  const Grid grid = cfg.make_grid();
  const Field u0 = make_initial(cfg.initial, grid, cfg.backend);
  const fs::path outdir(cfg.output_dir);
  fs::create_directories(outdir);

  json meta = meta_base("solve", cfg);
  meta["threshold34"] = threshold_block(u0, cfg.backend);

  RunResult result;
  try {
    result = run(u0, cfg.solver());
  } catch (const numerical_error& e) {
    meta["status"] = "NumericalFailure";
    meta["error"] = e.what();
    write_json(outdir / "meta.json", meta);
    std::cerr << "numerical failure: " << e.what() << '\n';
    return exit_numerical;
  }

  write_diagnostics_csv((outdir / "diagnostics.csv").string(),
                        result.diagnostics);
  if (cfg.write_snapshots) {
    fs::create_directories(outdir / "snapshots");
    json index = json::array();
    for (std::size_t i = 0; i < result.snapshots.size(); ++i) {
      const std::string name = "t_" + std::to_string(i) + ".csv";
      write_field_csv((outdir / "snapshots" / name).string(),
                      result.snapshots[i].second);
      index.push_back(
          {{"index", i}, {"t", result.snapshots[i].first}, {"file", name}});
    }
    meta["snapshots"] = index;
  }

  meta["status"] = to_string(result.status);
  meta["t_final"] = result.t_final;
  meta["steps"] = result.diagnostics.size() - 1;
  write_json(outdir / "meta.json", meta);

  std::cout << "solve: " << to_string(result.status)
            << " t_final=" << result.t_final << '\n';
  return status_exit_code(result.status);
}

int cmd_classify(const RunConfig& cfg) {
  const Grid grid = cfg.make_grid();
  const Field u0 = make_initial(cfg.initial, grid, cfg.backend);
  const ClassificationReport rep =
      classify_initial(u0, cfg.backend, default_epsilon);

  json pattern{{"kind", to_string(rep.pattern_m_twisted.kind)},
               {"zero_tol", rep.pattern_m_twisted.zero_tol}};
  pattern["crossing"] = rep.pattern_m_twisted.crossing
                            ? json(*rep.pattern_m_twisted.crossing)
                            : json();

  json report{{"pattern_m_twisted", pattern},
              {"m0_changes_sign", rep.m0_changes_sign},
              {"verdict", to_string(rep.verdict)}};
  report["threshold34"] =
      rep.threshold34 ? threshold_to_json(*rep.threshold34) : json();

  const fs::path outdir(cfg.output_dir);
  fs::create_directories(outdir);
  write_json(outdir / "report.json", report);

  json meta = meta_base("classify", cfg);
  meta["verdict"] = to_string(rep.verdict);
  write_json(outdir / "meta.json", meta);

  std::cout << "classify: " << to_string(rep.verdict) << '\n';
  return exit_ok;
}

int cmd_bridge(const RunConfig& cfg) {
  const Grid grid = cfg.make_grid();
  const Field u0 = make_initial(cfg.initial, grid, cfg.backend);
  const std::vector<double> times = uniform_times(cfg.t_end, 4);
  const BridgeReport rep = bridge_compare(u0, cfg.solver(), times);

  json report{{"sample_times", rep.sample_times},
              {"rel_l2_error", rep.rel_l2_error},
              {"gch_fingerprint", rep.gch_fingerprint},
              {"dp_fingerprint", rep.dp_fingerprint},
              {"ok", rep.ok}};
  if (!rep.ok) {
    report["failed_side"] = rep.failed_side;
    report["failure"] = rep.failure;
  }

  const fs::path outdir(cfg.output_dir);
  fs::create_directories(outdir);
  write_json(outdir / "report.json", report);

  json meta = meta_base("bridge", cfg);
  meta["ok"] = rep.ok;
  write_json(outdir / "meta.json", meta);

  if (rep.ok) {
    std::cout << "bridge: max rel error "
              << *std::max_element(rep.rel_l2_error.begin(),
                                   rep.rel_l2_error.end())
              << '\n';
    return exit_ok;
  }
  std::cerr << "bridge: " << rep.failed_side << " run failed: " << rep.failure
            << '\n';
  return rep.failed_status == RunStatus::BlowUpDetected ? exit_blowup
                                                        : exit_numerical;
}

int cmd_mollify_study(const RunConfig& cfg) {
  const Grid grid = cfg.make_grid();
  const Field u0 = make_initial(cfg.initial, grid, cfg.backend);
  const std::vector<int> ladder{2, 4, 8, 16};
  const StudyReport rep = weak_convergence_study(u0, ladder, cfg.solver());

  json entries = json::array();
  for (const auto& e : rep.entries)
    entries.push_back({{"n", e.n},
                       {"ok", e.ok},
                       {"status", e.status},
                       {"h1_error", e.h1_error},
                       {"h2_sup", e.h2_sup},
                       {"energy_drift", e.energy_drift}});

  json report{{"n_values", rep.n_values},
              {"bound_constant", rep.bound_constant},
              {"entries", entries},
              {"pairwise_l2", rep.pairwise_l2}};

  const fs::path outdir(cfg.output_dir);
  fs::create_directories(outdir);
  write_json(outdir / "report.json", report);
  write_json(outdir / "meta.json", meta_base("mollify-study", cfg));

  std::cout << "mollify-study: " << rep.entries.size() << " levels\n";
  return exit_ok;
}

int cmd_perturb(const RunConfig& cfg) {
  const Grid grid = cfg.make_grid();
  const Field u0 = make_initial(cfg.initial, grid, cfg.backend);
  Field v0 = u0;
  {
    const Field bump =
        sample(grid, [](double x) { return std::exp(-x * x); });
    kernels::add_scaled(v0.span(), bump.span(), 1e-3);
  }
  const std::vector<double> times = uniform_times(cfg.t_end, 8);
  const GronwallReport rep = gronwall_check(u0, v0, cfg.solver(), times);

  json series = json::array();
  for (const auto& s : rep.series)
    series.push_back({{"t", s.t}, {"d", s.distance}, {"bound", s.bound}});

  json report{{"M", rep.m_constant},
              {"d0", rep.d0},
              {"series", series},
              {"satisfied", rep.satisfied}};

  const fs::path outdir(cfg.output_dir);
  fs::create_directories(outdir);
  write_json(outdir / "report.json", report);
  write_json(outdir / "meta.json", meta_base("perturb", cfg));

  std::cout << "perturb: satisfied=" << (rep.satisfied ? "true" : "false")
            << '\n';
  return exit_ok;
}

} // namespace

int dispatch(const std::vector<std::string>& args) {
  CLI::App app{"numerical laboratory for a generalized Camassa-Holm equation"};
  app.require_subcommand(1);

  struct SubArgs {
    std::string config;
    std::string out;
  };
  const std::vector<std::string> names{"solve", "classify", "bridge",
                                       "mollify-study", "perturb"};
  const std::vector<std::string> descriptions{
      "advance the equation and record diagnostics",
      "classify initial data against the sign-condition criteria",
      "cross-validate against an independent Degasperis-Procesi solve",
      "solver convergence under mollified initial data",
      "two-solution stability (Gronwall) check"};
  std::map<std::string, SubArgs> sub_args;
  for (std::size_t i = 0; i < names.size(); ++i) {
    auto* sub = app.add_subcommand(names[i], descriptions[i]);
    auto& sa = sub_args[names[i]];
    sub->add_option("--config", sa.config, "path to the JSON run config")
        ->required();
    sub->add_option("--out", sa.out, "override output.dir");
  }

  std::vector<std::string> argv_order(args.rbegin(), args.rend());
  try {
    app.parse(argv_order);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n' << app.help();
    return exit_config;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  const SubArgs& sa = sub_args[name];

  try {
    RunConfig cfg = parse_config(sa.config);
    if (!sa.out.empty()) cfg.output_dir = sa.out;

    if (name == "solve") return cmd_solve(cfg);
    if (name == "classify") return cmd_classify(cfg);
    if (name == "bridge") return cmd_bridge(cfg);
    if (name == "mollify-study") return cmd_mollify_study(cfg);
    return cmd_perturb(cfg);
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return exit_config;
  } catch (const run_interrupted& e) {
    std::cerr << e.what() << '\n';
    return e.status == RunStatus::BlowUpDetected ? exit_blowup
                                                 : exit_numerical;
  } catch (const numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return exit_numerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return exit_config;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_numerical;
  }
}

} // namespace gchlab::cli
