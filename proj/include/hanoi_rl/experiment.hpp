#pragma once

// Episode runner, training loop, frozen evaluation and the repeated-run
// harness that turns them into learning curves.
//
// Every (budget, repetition) cell owns its table and random stream, seeded
// only from (master_seed, budget, repetition), so results do not depend on
// scheduling or on the number of worker threads.

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "hanoi_rl/expert_policy.hpp"
#include "hanoi_rl/hanoi_env.hpp"
#include "hanoi_rl/interventions.hpp"
#include "hanoi_rl/q_agent.hpp"

namespace hanoi_rl {

struct ExperimentConfig {
  AgentParams agent;
  InterventionPolicy policy = NoHelp{};
  std::vector<int> episode_grid = {1, 3, 10, 30, 100, 300, 1000, 3000, 10000};
  int repetitions = 100;
  std::uint64_t master_seed = 42;
  int move_cap = 10000;
  bool learn_from_expert = false;
  bool eval_epsilon_active = true;
  int eval_episodes_per_rep = 1;
  // Score the last training episode instead of a separate frozen one.
  bool score_training_episode = false;
  // Execution only; never changes results. 0 picks the hardware concurrency.
  int workers = 1;

  void validate() const {
    agent.validate();
    hanoi_rl::validate(policy);
    if (episode_grid.empty()) throw std::invalid_argument("episode grid is empty");
    if (episode_grid.front() < 0) throw std::invalid_argument("episode budgets must be non-negative");
    if (std::adjacent_find(episode_grid.begin(), episode_grid.end(), std::greater_equal<>()) != episode_grid.end())
      throw std::invalid_argument("episode grid must be strictly increasing");
    if (repetitions < 1) throw std::invalid_argument("repetitions must be at least 1");
    if (move_cap < 7) throw std::invalid_argument("move cap must be at least 7");
    if (eval_episodes_per_rep < 1) throw std::invalid_argument("evaluation episodes must be at least 1");
    if (workers < 0) throw std::invalid_argument("workers must be non-negative");
  }
};

enum class Actor : std::uint8_t { Agent, Expert };

struct MoveRecord {
  HanoiState state;
  Actor actor;
  HanoiState successor;
  double reward;
};

struct EpisodeLog {
  std::vector<MoveRecord> moves;
  int total_moves = 0;
  int expert_moves = 0;
  bool truncated = false;
};

using VisitCensus = std::array<std::int64_t, kNumStates>;

struct CurvePoint {
  int episodes_trained = 0;
  double mean_moves = 0.0;
  double stddev_moves = 0.0;
  double mean_expert_moves = 0.0;
  std::int64_t truncated_episodes = 0;
  VisitCensus states_visited_census{};
};

/// Plays one episode from the start state. Expert and agent moves both count
/// toward total_moves; the agent learns from expert moves only when
/// cfg.learn_from_expert is set.
inline EpisodeLog run_episode(QTable& q, const ExperimentConfig& cfg, bool learning, Rng& rng) {
  EpisodeLog log;
  HanoiState s = kStartState;
  while (!is_goal(s) && log.total_moves < cfg.move_cap) {
    TurnContext ctx{log.total_moves, best_q(q, s)};
    Actor actor = should_intervene(cfg.policy, ctx) ? Actor::Expert : Actor::Agent;
    HanoiState t = actor == Actor::Expert ? expert_action(s) : select_action(q, s, cfg.agent.epsilon, rng);
    double r = reward(s, t);
    if (learning && (actor == Actor::Agent || cfg.learn_from_expert)) update(q, s, t, r, cfg.agent);
    log.moves.push_back({s, actor, t, r});
    ++log.total_moves;
    if (actor == Actor::Expert) ++log.expert_moves;
    s = t;
  }
  log.truncated = !is_goal(s);
  return log;
}

struct TrainResult {
  QTable q;
  VisitCensus census{};
  // Summary of the last training episode; zero when n_episodes is 0.
  int last_total_moves = 0;
  int last_expert_moves = 0;
  std::int64_t truncated_episodes = 0;
};

/// Fresh zero table trained for n_episodes. The census counts every state
/// occupied, including the start of each episode.
inline TrainResult train(const ExperimentConfig& cfg, int n_episodes, Rng& rng) {
  if (n_episodes < 0) throw std::invalid_argument("n_episodes must be non-negative");
  TrainResult out;
  for (int e = 0; e < n_episodes; ++e) {
    EpisodeLog log = run_episode(out.q, cfg, true, rng);
    ++out.census[static_cast<std::size_t>(kStartState.index())];
    for (const auto& m : log.moves) ++out.census[static_cast<std::size_t>(m.successor.index())];
    out.last_total_moves = log.total_moves;
    out.last_expert_moves = log.expert_moves;
    if (log.truncated) ++out.truncated_episodes;
  }
  return out;
}

struct Evaluation {
  double moves = 0.0;
  double expert_moves = 0.0;
  std::int64_t truncated_episodes = 0;
};

/// Mean over cfg.eval_episodes_per_rep non-learning episodes under the training protocol.
inline Evaluation evaluate(const QTable& q, const ExperimentConfig& cfg, Rng& rng) {
  ExperimentConfig eval_cfg = cfg;
  if (!cfg.eval_epsilon_active) eval_cfg.agent.epsilon = 0.0;
  QTable frozen = q;
  Evaluation out;
  for (int i = 0; i < cfg.eval_episodes_per_rep; ++i) {
    EpisodeLog log = run_episode(frozen, eval_cfg, false, rng);
    out.moves += log.total_moves;
    out.expert_moves += log.expert_moves;
    if (log.truncated) ++out.truncated_episodes;
  }
  out.moves /= cfg.eval_episodes_per_rep;
  out.expert_moves /= cfg.eval_episodes_per_rep;
  return out;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Summary {
  double mean = 0.0;
  double stddev = 0.0;
};

/// Arithmetic mean and sample standard deviation (0 for a single sample).
inline Summary summarize(const std::vector<double>& xs) {
  Summary s;
  if (xs.empty()) return s;
  s.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return s;
}

/// Runs job(i) for i in [0, n) on `workers` threads. Callers write results by
/// index, so the outcome is independent of the thread count.
template <typename Job>
void parallel_for(std::size_t n, int workers, Job&& job) {
  std::size_t threads = workers > 0 ? static_cast<std::size_t>(workers)
                                    : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(n, 1));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (std::size_t w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) job(i);
    });
  }
}

}  // namespace detail

/// Seed of the random stream for one (budget, repetition) cell.
inline std::uint64_t child_seed(std::uint64_t master_seed, int budget, int repetition) {
  std::uint64_t h = detail::splitmix64(master_seed);
  h = detail::splitmix64(h ^ static_cast<std::uint64_t>(budget));
  return detail::splitmix64(h ^ (static_cast<std::uint64_t>(repetition) << 32));
}

inline std::vector<CurvePoint> run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::size_t reps = static_cast<std::size_t>(cfg.repetitions);
  const std::size_t cells = cfg.episode_grid.size() * reps;

  struct CellResult {
    Evaluation eval;
    VisitCensus census{};
    std::int64_t train_truncated = 0;
  };
  std::vector<CellResult> results(cells);

  detail::parallel_for(cells, cfg.workers, [&](std::size_t i) {
    int budget = cfg.episode_grid[i / reps];
    int rep = static_cast<int>(i % reps);
    Rng rng(child_seed(cfg.master_seed, budget, rep));
    TrainResult trained = train(cfg, budget, rng);
    CellResult& cell = results[i];
    if (cfg.score_training_episode) {
      cell.eval = {static_cast<double>(trained.last_total_moves), static_cast<double>(trained.last_expert_moves), 0};
    } else {
      cell.eval = evaluate(trained.q, cfg, rng);
    }
    cell.census = trained.census;
    cell.train_truncated = trained.truncated_episodes;
  });

  std::vector<CurvePoint> curve;
  curve.reserve(cfg.episode_grid.size());
  for (std::size_t g = 0; g < cfg.episode_grid.size(); ++g) {
    CurvePoint p;
    p.episodes_trained = cfg.episode_grid[g];
    std::vector<double> moves, expert;
    moves.reserve(reps);
    expert.reserve(reps);
    for (std::size_t r = 0; r < reps; ++r) {
      const CellResult& cell = results[g * reps + r];
      moves.push_back(cell.eval.moves);
      expert.push_back(cell.eval.expert_moves);
      p.truncated_episodes += cell.eval.truncated_episodes + cell.train_truncated;
      for (std::size_t s = 0; s < cell.census.size(); ++s) p.states_visited_census[s] += cell.census[s];
    }
    auto m = detail::summarize(moves);
    p.mean_moves = m.mean;
    p.stddev_moves = m.stddev;
    p.mean_expert_moves = detail::summarize(expert).mean;
    curve.push_back(p);
  }
  return curve;
}

/// Untrained pure-random agent (epsilon forced to 1), alone or with
/// period-2 turn taking. One episode per repetition.
inline CurvePoint random_baseline(bool with_help, int repetitions, std::uint64_t seed, int move_cap = 10000) {
  if (repetitions < 1) throw std::invalid_argument("repetitions must be at least 1");
  ExperimentConfig cfg;
  cfg.agent.epsilon = 1.0;
  cfg.policy = with_help ? InterventionPolicy{Canonical{2}} : InterventionPolicy{NoHelp{}};
  cfg.move_cap = move_cap;

  std::vector<double> moves, expert;
  CurvePoint p;
  for (int r = 0; r < repetitions; ++r) {
    Rng rng(child_seed(seed, 0, r));
    QTable q;
    EpisodeLog log = run_episode(q, cfg, false, rng);
    moves.push_back(log.total_moves);
    expert.push_back(log.expert_moves);
    if (log.truncated) ++p.truncated_episodes;
  }
  auto m = detail::summarize(moves);
  p.mean_moves = m.mean;
  p.stddev_moves = m.stddev;
  p.mean_expert_moves = detail::summarize(expert).mean;
  return p;
}

}  // namespace hanoi_rl
