#pragma once

// Scenario definitions for each figure, the command-line parser that selects
// one, and the runner that writes its CSV, SVG and manifest.

#include <chrono>
#include <ctime>
#include <filesystem>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hanoi_rl/experiment.hpp"
#include "hanoi_rl/reporting/csv.hpp"
#include "hanoi_rl/reporting/svg_plot.hpp"

namespace hanoi_rl::reporting {

inline constexpr const char* kVersion = "0.1.0";

/// Ask-for-help thresholds bracketing the optimal-value ladder 100 * 0.8^d.
inline const std::vector<double> kDefaultThresholds = {10.0, 26.0, 50.0, 80.0};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HelpRequested {
  std::string text;
};

enum class SeriesKind { Learning, RandomBaseline };

struct SeriesSpec {
  std::string name;
  SeriesKind kind = SeriesKind::Learning;
  ExperimentConfig config;
  bool with_help = false;  // RandomBaseline only
};

struct RunRequest {
  std::string scenario;
  ExperimentConfig base;
  std::filesystem::path out_dir = "out";
  AxisMode axes = AxisMode::LogLog;
  std::vector<SeriesSpec> series;
};

inline SeriesSpec learning_series(std::string name, const ExperimentConfig& base, InterventionPolicy policy) {
  SeriesSpec s{std::move(name), SeriesKind::Learning, base, false};
  s.config.policy = policy;
  return s;
}

inline SeriesSpec baseline_series(std::string name, const ExperimentConfig& base, bool with_help) {
  return SeriesSpec{std::move(name), SeriesKind::RandomBaseline, base, with_help};
}

/// Turn-taking at period 2 against learning alone, plus both random baselines.
inline std::vector<SeriesSpec> fig1_series(const ExperimentConfig& base) {
  return {learning_series("la1_no_help", base, NoHelp{}), learning_series("la1_canonical2", base, Canonical{2}),
          baseline_series("random", base, false), baseline_series("random_help", base, true)};
}

inline std::vector<SeriesSpec> fig2_series(const ExperimentConfig& base) {
  std::vector<SeriesSpec> out{learning_series("no_help", base, NoHelp{})};
  for (int k : {2, 3, 4}) out.push_back(learning_series("canonical" + std::to_string(k), base, Canonical{k}));
  return out;
}

/// Ask-for-help sweep. These learners always learn from the expert's moves:
/// with a zero table every turn is handed to the expert, so an agent that
/// only learns from its own moves would never update.
inline std::vector<SeriesSpec> fig3_series(const ExperimentConfig& base) {
  std::vector<SeriesSpec> out{learning_series("no_help", base, NoHelp{})};
  for (double th : kDefaultThresholds) {
    auto s = learning_series("ask_" + std::to_string(static_cast<int>(th)), base, AskForHelp{th});
    s.config.learn_from_expert = true;
    out.push_back(std::move(s));
  }
  return out;
}

inline RunRequest parse_cli(int argc, const char* const* argv) {
  CLI::App app{"Tabular Q-learning on the 3-disk Tower of Hanoi with expert interventions", "hanoi_sim"};
  app.require_subcommand(1);

  ExperimentConfig cfg;
  std::string out_dir = "out";
  bool eval_greedy = false;
  int period = 0;
  double threshold = -1.0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--reps", cfg.repetitions, "Repetitions per grid point")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.master_seed, "Master seed");
    sub->add_option("--episodes", cfg.episode_grid, "Training budgets, comma separated")->delimiter(',');
    sub->add_option("--move-cap", cfg.move_cap, "Per-episode move limit")->check(CLI::Range(7, 1 << 30));
    sub->add_option("--workers", cfg.workers, "Worker threads (0 = all cores); results do not depend on it")
        ->check(CLI::NonNegativeNumber);
    sub->add_flag("--learn-from-expert", cfg.learn_from_expert, "Also update on the expert's moves");
    sub->add_flag("--eval-greedy", eval_greedy, "Evaluate with epsilon = 0");
    sub->add_option("--out", out_dir, "Output directory");
  };

  auto* fig1 = app.add_subcommand("fig1", "No help vs turn taking every 2 moves, with random baselines");
  auto* fig2 = app.add_subcommand("fig2", "Turn taking every 2, 3 and 4 moves vs no help");
  auto* fig3 = app.add_subcommand("fig3", "Ask-for-help threshold sweep vs no help");
  auto* custom = app.add_subcommand("custom", "Single learner with an explicit protocol");
  for (auto* sub : {fig1, fig2, fig3, custom}) add_common(sub);
  auto* period_opt = custom->add_option("--period", period, "Expert takes every k-th move")->check(CLI::Range(2, 1 << 30));
  auto* threshold_opt =
      custom->add_option("--threshold", threshold, "Expert moves when best value < threshold")->check(CLI::Range(0.0, 100.0));
  period_opt->excludes(threshold_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  cfg.eval_epsilon_active = !eval_greedy;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  RunRequest req;
  req.out_dir = out_dir;
  if (fig1->parsed()) {
    req.scenario = "fig1";
    req.series = fig1_series(cfg);
  } else if (fig2->parsed()) {
    req.scenario = "fig2";
    req.series = fig2_series(cfg);
  } else if (fig3->parsed()) {
    req.scenario = "fig3";
    req.axes = AxisMode::Linear;
    req.series = fig3_series(cfg);
  } else {
    req.scenario = "custom";
    InterventionPolicy policy = NoHelp{};
    if (period_opt->count() > 0) policy = Canonical{period};
    if (threshold_opt->count() > 0) policy = AskForHelp{threshold};
    cfg.policy = policy;
    req.series = {learning_series("custom", cfg, policy)};
  }
  req.base = cfg;
  req.base.policy = req.series.front().config.policy;
  return req;
}

inline RunRequest parse_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"hanoi_sim"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return parse_cli(static_cast<int>(argv.size()), argv.data());
}

struct SeriesResult {
  SeriesSpec spec;
  std::vector<CurvePoint> curve;
};

inline std::vector<SeriesResult> run_scenario(const RunRequest& req) {
  std::vector<SeriesResult> out;
  for (const auto& s : req.series) {
    if (s.kind == SeriesKind::Learning) {
      out.push_back({s, run_experiment(s.config)});
    } else {
      // Distinct stream family from the learners' (budget, repetition) cells.
      std::uint64_t seed = hanoi_rl::detail::splitmix64(s.config.master_seed ^ (s.with_help ? 0xB2ULL : 0xB1ULL));
      out.push_back({s, {random_baseline(s.with_help, s.config.repetitions, seed, s.config.move_cap)}});
    }
  }
  return out;
}

inline PlotSpec make_plot(const RunRequest& req, const std::vector<SeriesResult>& results) {
  PlotSpec plot;
  plot.title = req.scenario;
  plot.axes = req.axes;
  for (const auto& r : results) {
    PlotSeries ps;
    ps.name = r.spec.name;
    ps.horizontal = r.spec.kind == SeriesKind::RandomBaseline;
    for (const auto& p : r.curve) {
      ps.x.push_back(p.episodes_trained);
      ps.y.push_back(p.mean_moves);
    }
    plot.series.push_back(std::move(ps));
  }
  return plot;
}

inline std::string csv_name(const RunRequest& req, const SeriesSpec& s) {
  return req.series.size() == 1 ? req.scenario + ".csv" : req.scenario + "_" + s.name + ".csv";
}

inline std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline std::string format_manifest(const RunRequest& req, const std::vector<std::string>& outputs,
                                   const std::string& timestamp) {
  const auto& c = req.base;
  std::ostringstream m;
  m << "scenario: " << req.scenario << '\n'
    << "version: " << kVersion << '\n'
    << "timestamp: " << timestamp << '\n'
    << "alpha: " << fixed6(c.agent.alpha) << '\n'
    << "gamma: " << fixed6(c.agent.gamma) << '\n'
    << "epsilon: " << fixed6(c.agent.epsilon) << '\n'
    << "episodes:";
  for (std::size_t i = 0; i < c.episode_grid.size(); ++i) m << (i ? "," : " ") << c.episode_grid[i];
  m << '\n'
    << "repetitions: " << c.repetitions << '\n'
    << "seed: " << c.master_seed << '\n'
    << "move_cap: " << c.move_cap << '\n'
    << "learn_from_expert: " << (c.learn_from_expert ? "true" : "false") << '\n'
    << "eval_epsilon_active: " << (c.eval_epsilon_active ? "true" : "false") << '\n'
    << "eval_episodes_per_rep: " << c.eval_episodes_per_rep << '\n';
  for (const auto& s : req.series) {
    m << "series: " << s.name << ' '
      << (s.kind == SeriesKind::RandomBaseline ? std::string(s.with_help ? "random+canonical(period=2)" : "random")
                                               : describe(s.config.policy))
      << (s.kind == SeriesKind::Learning && s.config.learn_from_expert ? " learn_from_expert" : "") << '\n';
  }
  for (const auto& o : outputs) m << "output: " << o << '\n';
  return m.str();
}

/// Writes one CSV per series, the SVG plot and manifest.txt; returns the file names.
inline std::vector<std::string> write_outputs(const RunRequest& req, const std::vector<SeriesResult>& results) {
  std::filesystem::create_directories(req.out_dir);
  std::vector<std::string> outputs;
  for (const auto& r : results) {
    auto name = csv_name(req, r.spec);
    write_csv(r.curve, req.out_dir / name);
    outputs.push_back(name);
  }
  auto svg = req.scenario + ".svg";
  write_text(req.out_dir / svg, render_plot(make_plot(req, results)));
  outputs.push_back(svg);
  write_text(req.out_dir / "manifest.txt", format_manifest(req, outputs, utc_timestamp()));
  outputs.push_back("manifest.txt");
  return outputs;
}

}  // namespace hanoi_rl::reporting
