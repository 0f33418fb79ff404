// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
//
// Curves use 100 repetitions and master seed 42 on the default grid with an
// untrained point (budget 0) prepended.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hanoi_rl/expert_policy.hpp"
#include "hanoi_rl/experiment.hpp"
#include "hanoi_rl/reporting/scenario.hpp"

using namespace hanoi_rl;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr int kReps = 100;

struct Criterion {
  bool ok = true;
  std::vector<std::string> notes;

  void check(bool cond, const std::string& what) {
    ok = ok && cond;
    notes.push_back(std::string(cond ? "  ok   " : "  FAIL ") + what);
  }
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

using Curve = std::vector<CurvePoint>;

ExperimentConfig base_config() {
  ExperimentConfig cfg;
  cfg.repetitions = kReps;
  cfg.master_seed = kSeed;
  cfg.episode_grid.insert(cfg.episode_grid.begin(), 0);
  return cfg;
}

const CurvePoint& at(const Curve& c, int budget) {
  for (const auto& p : c)
    if (p.episodes_trained == budget) return p;
  throw std::logic_error("budget not on grid: " + std::to_string(budget));
}

std::string series_str(const Curve& c, bool expert = false) {
  std::string s;
  for (const auto& p : c)
    s += " " + std::to_string(p.episodes_trained) + ":" + fmt("%.2f", expert ? p.mean_expert_moves : p.mean_moves);
  return s;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Curves {
  Curve no_help, canonical2, canonical3, canonical4;
  std::map<double, Curve> ask;
};

Curves run_all() {
  Curves c;
  auto cfg = base_config();
  for (const auto& s : reporting::fig2_series(cfg)) {
    auto curve = run_experiment(s.config);
    if (s.name == "no_help") c.no_help = curve;
    if (s.name == "canonical2") c.canonical2 = curve;
    if (s.name == "canonical3") c.canonical3 = curve;
    if (s.name == "canonical4") c.canonical4 = curve;
  }
  for (const auto& s : reporting::fig3_series(cfg)) {
    if (auto* a = std::get_if<AskForHelp>(&s.config.policy)) c.ask[a->threshold] = run_experiment(s.config);
  }
  return c;
}

Criterion structural_census() {
  Criterion c;
  int directed = 0, two = 0;
  for (HanoiState s : enumerate_states()) {
    directed += static_cast<int>(legal_moves(s).size());
    two += legal_moves(s).size() == 2;
  }
  const auto& d = goal_distances();
  bool connected = true;
  for (HanoiState s : enumerate_states()) connected = connected && d[s] >= 0;
  c.check(enumerate_states().size() == 27, "27 states");
  c.check(directed == 78, "78 directed legal moves (got " + std::to_string(directed) + ")");
  c.check(two == 3, "3 states with 2 successors (got " + std::to_string(two) + ")");
  c.check(connected, "move graph connected");
  c.check(d.max() == 7, "max distance to 222 is 7 (got " + std::to_string(d.max()) + ")");
  c.check(d[kStartState] == 7, "d(111) = 7");
  return c;
}

Criterion oracle_equivalence() {
  Criterion c;
  auto q = value_iteration(0.8, 1e-12);
  const auto& d = goal_distances();
  double worst = 0.0;
  q.for_each_move([&](HanoiState, HanoiState t, double v) { worst = std::max(worst, std::abs(v - 100.0 * std::pow(0.8, d[t]))); });
  c.check(worst < 1e-9, "value iteration matches 100*0.8^d on 78 moves (max err " + fmt("%.3g", worst) + ")");
  int good = 0;
  for (HanoiState s : enumerate_states())
    if (!is_goal(s) && d[expert_action(s)] == d[s] - 1) ++good;
  c.check(good == 26, "expert decreases distance by 1 from all 26 non-goal states (" + std::to_string(good) + ")");
  return c;
}

Criterion untrained_levels(const Curves& cv) {
  Criterion c;
  double alone = at(cv.no_help, 0).mean_moves, helped = at(cv.canonical2, 0).mean_moves;
  c.check(alone >= 30 && alone <= 300, "no-help untrained mean in [30, 300]: " + fmt("%.2f", alone));
  c.check(helped >= 5 && helped <= 30, "canonical(2) untrained mean in [5, 30]: " + fmt("%.2f", helped));
  return c;
}

Criterion convergence_ordering(const Curves& cv) {
  Criterion c;
  double nh1000 = at(cv.no_help, 1000).mean_moves;
  double c1000 = at(cv.canonical2, 1000).mean_moves;
  double c3000 = at(cv.canonical2, 3000).mean_moves;
  c.check(nh1000 <= 8, "no-help mean <= 8 at budget 1000: " + fmt("%.3f", nh1000));
  c.check(c1000 > 8, "canonical(2) mean > 8 at budget 1000: " + fmt("%.3f", c1000));
  c.check(c3000 <= 8, "canonical(2) mean <= 8 at budget 3000: " + fmt("%.3f", c3000));

  // The crossing is where learning alone starts to beat turn taking: the
  // no-help curve moves from above the helped one to below it.
  int crossing = -1;
  for (std::size_t i = 1; i < cv.no_help.size(); ++i) {
    double before = cv.no_help[i - 1].mean_moves - cv.canonical2[i - 1].mean_moves;
    double after = cv.no_help[i].mean_moves - cv.canonical2[i].mean_moves;
    if (before >= 0 && after < 0) {
      crossing = cv.no_help[i].episodes_trained;
      break;
    }
  }
  c.check(crossing >= 100 && crossing <= 1000,
          "no-help overtakes canonical(2) at a grid budget in [100, 1000]: " +
              (crossing < 0 ? std::string("never") : std::to_string(crossing)));
  c.notes.push_back("       no-help     " + series_str(cv.no_help));
  c.notes.push_back("       canonical(2)" + series_str(cv.canonical2));
  return c;
}

Criterion exploration_blocking(const Curves& cv) {
  Criterion c;
  auto count_zero = [](const CurvePoint& p) {
    int z = 0;
    for (auto v : p.states_visited_census) z += v == 0;
    return z;
  };
  int helped = count_zero(at(cv.canonical2, 3000)), alone = count_zero(at(cv.no_help, 3000));
  std::string never;
  for (HanoiState s : enumerate_states())
    if (at(cv.canonical2, 3000).states_visited_census[static_cast<std::size_t>(s.index())] == 0) never += " " + s.str();
  c.check(helped >= 1, "canonical(2) 100x3000 census has never-visited states: " + std::to_string(helped) + " {" + never + " }");
  c.check(alone == 0, "no-help 100x3000 census visits every state (unvisited: " + std::to_string(alone) + ")");
  return c;
}

Criterion rate_sweep(const Curves& cv) {
  Criterion c;
  for (std::size_t i = 0; i < cv.no_help.size(); ++i) {
    double k4 = cv.canonical4[i].mean_moves, nh = cv.no_help[i].mean_moves;
    c.check(k4 <= 1.2 * nh, "budget " + std::to_string(cv.no_help[i].episodes_trained) + ": canonical(4) " +
                                fmt("%.2f", k4) + " <= 1.2 x no-help " + fmt("%.2f", nh));
  }
  c.notes.push_back("       canonical(3)" + series_str(cv.canonical3));
  return c;
}

Criterion ask_for_help(const Curves& cv) {
  Criterion c;
  for (const auto& [th, curve] : cv.ask) {
    std::string tag = "threshold " + fmt("%g", th) + ": ";
    c.check(at(curve, 0).mean_moves <= 10, tag + "untrained mean moves <= 10: " + fmt("%.2f", at(curve, 0).mean_moves));
    double most = 0;
    for (const auto& p : curve) most = std::max(most, p.mean_expert_moves);
    c.check(most <= 7, tag + "mean interventions <= 7 at every budget (max " + fmt("%.2f", most) + ")");
    c.check(curve.back().mean_expert_moves < 1,
            tag + "mean interventions < 1 at final budget: " + fmt("%.2f", curve.back().mean_expert_moves));
    c.notes.push_back("       interventions" + series_str(curve, true));
  }
  return c;
}

Criterion h2_comparison(const Curves& cv) {
  Criterion c;
  double nh10 = at(cv.no_help, 10).mean_moves;
  for (const auto& [th, curve] : cv.ask) {
    std::string tag = "threshold " + fmt("%g", th) + ": ";
    c.check(at(curve, 10).mean_moves < nh10,
            tag + "ask-for-help " + fmt("%.2f", at(curve, 10).mean_moves) + " < no-help " + fmt("%.2f", nh10) + " at budget 10");
    // Relative to the larger of the two means.
    double worst = 0;
    int worst_budget = 0;
    for (std::size_t i = 0; i < curve.size(); ++i) {
      double a = curve[i].mean_moves, k = cv.canonical2[i].mean_moves;
      double rel = std::abs(a - k) / std::max(a, k);
      if (rel > worst) {
        worst = rel;
        worst_budget = curve[i].episodes_trained;
      }
    }
    c.check(worst < 0.5, tag + "differs from canonical(2) by < 50% at every budget (worst " + fmt("%.1f", 100 * worst) +
                             "% at budget " + std::to_string(worst_budget) + ")");
  }
  return c;
}

Criterion determinism() {
  Criterion c;
  auto run_fig1 = [](const std::string& dir, int workers) {
    auto req = reporting::parse_cli(
        {"fig1", "--reps", std::to_string(kReps), "--seed", std::to_string(kSeed), "--workers", std::to_string(workers)});
    req.out_dir = fs::temp_directory_path() / dir;
    fs::remove_all(req.out_dir);
    auto files = reporting::write_outputs(req, reporting::run_scenario(req));
    std::map<std::string, std::string> csv;
    for (const auto& f : files)
      if (f.ends_with(".csv")) csv[f] = slurp(req.out_dir / f);
    return csv;
  };
  auto a = run_fig1("hanoi_rl_accept_a", 1);
  auto b = run_fig1("hanoi_rl_accept_b", 1);
  auto d = run_fig1("hanoi_rl_accept_c", 4);
  c.check(a.size() == 4, "fig1 wrote 4 CSV files");
  c.check(a == b, "two fig1 runs with seed 42 give byte-identical CSVs");
  c.check(a == d, "fig1 CSVs identical with 1 and 4 workers");
  return c;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Criterion()>>> criteria;
  criteria.emplace_back("C1 structural census", structural_census);
  criteria.emplace_back("C2 oracle equivalence", oracle_equivalence);

  std::printf("running learning curves (%d repetitions, seed %llu)...\n", kReps, static_cast<unsigned long long>(kSeed));
  const Curves cv = run_all();
  criteria.emplace_back("C3 untrained levels", [&] { return untrained_levels(cv); });
  criteria.emplace_back("C4 convergence ordering", [&] { return convergence_ordering(cv); });
  criteria.emplace_back("C5 exploration blocking", [&] { return exploration_blocking(cv); });
  criteria.emplace_back("C6 intervention-rate sweep", [&] { return rate_sweep(cv); });
  criteria.emplace_back("C7 ask-for-help behaviour", [&] { return ask_for_help(cv); });
  criteria.emplace_back("C8 on-demand vs turn taking", [&] { return h2_comparison(cv); });
  criteria.emplace_back("C9 determinism", determinism);

  int failed = 0;
  for (auto& [name, fn] : criteria) {
    Criterion c = fn();
    std::printf("[%s] %s\n", c.ok ? "PASS" : "FAIL", name.c_str());
    for (const auto& n : c.notes) std::printf("%s\n", n.c_str());
    failed += !c.ok;
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
