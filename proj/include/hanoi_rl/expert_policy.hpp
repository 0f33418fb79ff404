#pragma once

// The optimal expert and the exact solutions it is checked against:
// breadth-first goal distances and value iteration on the move graph.

#include <array>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

#include "hanoi_rl/hanoi_env.hpp"
#include "hanoi_rl/move_values.hpp"

namespace hanoi_rl {

/// Minimum number of moves from each state to the goal.
class DistanceMap {
 public:
  explicit DistanceMap(std::array<int, kNumStates> d) : d_(d) {}

  int operator[](HanoiState s) const { return d_[static_cast<std::size_t>(s.index())]; }
  int max() const {
    int m = 0;
    for (int v : d_) m = std::max(m, v);
    return m;
  }

 private:
  std::array<int, kNumStates> d_;
};

/// BFS outward from the goal; moves are reversible so the graph is undirected.
inline DistanceMap compute_distances() {
  std::array<int, kNumStates> d;
  d.fill(-1);
  std::deque<HanoiState> frontier{kGoalState};
  d[static_cast<std::size_t>(kGoalState.index())] = 0;
  while (!frontier.empty()) {
    HanoiState s = frontier.front();
    frontier.pop_front();
    for (HanoiState t : legal_moves(s)) {
      auto& dt = d[static_cast<std::size_t>(t.index())];
      if (dt < 0) {
        dt = d[static_cast<std::size_t>(s.index())] + 1;
        frontier.push_back(t);
      }
    }
  }
  return DistanceMap(d);
}

inline const DistanceMap& goal_distances() {
  static const DistanceMap map = compute_distances();
  return map;
}

/// A successor one step closer to the goal; the lexicographically smallest one on ties.
inline HanoiState expert_action(HanoiState s) {
  if (is_goal(s)) throw std::logic_error("expert asked to move from the goal state");
  const auto& d = goal_distances();
  for (HanoiState t : legal_moves(s)) {
    if (d[t] == d[s] - 1) return t;
  }
  throw std::logic_error("no distance-decreasing move from " + s.str());
}

using OptimalQTable = MoveValues;

/// Bellman optimality backups from all-zero values until the largest change
/// drops below `tolerance`. The goal is absorbing with zero continuation value.
inline OptimalQTable value_iteration(double gamma, double tolerance) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma must lie in (0, 1)");
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");

  OptimalQTable q;
  for (;;) {
    OptimalQTable next;
    double delta = 0.0;
    for (HanoiState s : enumerate_states()) {
      for (HanoiState t : legal_moves(s)) {
        double continuation = is_goal(t) ? 0.0 : q.max_at(t);
        double v = reward(s, t) + gamma * continuation;
        delta = std::max(delta, std::abs(v - q.at(s, t)));
        next.at(s, t) = v;
      }
    }
    q = next;
    if (delta < tolerance) return q;
  }
}

}  // namespace hanoi_rl
