#pragma once

// Tabular Q-learning over the move graph with epsilon-greedy selection.

#include <cstdint>
#include <random>
#include <stdexcept>

#include "hanoi_rl/hanoi_env.hpp"
#include "hanoi_rl/move_values.hpp"

namespace hanoi_rl {

using Rng = std::mt19937_64;

struct AgentParams {
  double alpha = 1.0;
  double gamma = 0.8;
  double epsilon = 0.05;

  void validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in (0, 1]");
    if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma must lie in (0, 1)");
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw std::invalid_argument("epsilon must lie in [0, 1]");
  }
};

/// Zero-initialised, so an untrained greedy agent ties everywhere and moves uniformly.
using QTable = MoveValues;

inline double best_q(const QTable& q, HanoiState s) { return q.max_at(s); }

/// Uniform random successor with probability epsilon, otherwise an argmax of q
/// with ties broken uniformly.
inline HanoiState select_action(const QTable& q, HanoiState s, double epsilon, Rng& rng) {
  auto succ = legal_moves(s);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  if (coin(rng) < epsilon) {
    std::uniform_int_distribution<std::size_t> pick(0, succ.size() - 1);
    return succ[pick(rng)];
  }

  double best = q.max_at(s);
  std::array<HanoiState, kMaxSuccessors> tied{};
  std::size_t n_tied = 0;
  for (std::size_t i = 0; i < succ.size(); ++i) {
    if (q.at_slot(s, static_cast<int>(i)) == best) tied[n_tied++] = succ[i];
  }
  if (n_tied == 1) return tied[0];
  std::uniform_int_distribution<std::size_t> pick(0, n_tied - 1);
  return tied[pick(rng)];
}

/// One Watkins backup of q(s->t). The goal is absorbing, so a move into it
/// has no continuation term.
inline void update(QTable& q, HanoiState s, HanoiState t, double r, const AgentParams& params) {
  double& cell = q.at(s, t);
  double continuation = is_goal(t) ? 0.0 : q.max_at(t);
  cell = (1.0 - params.alpha) * cell + params.alpha * (r + params.gamma * continuation);
}

}  // namespace hanoi_rl
