#pragma once

#include <algorithm>
#include <array>
#include <cstddef>

#include "hanoi_rl/hanoi_env.hpp"

namespace hanoi_rl {

/// A real value for each of the 78 legal directed moves. Illegal pairs have
/// no storage and are rejected on access.
class MoveValues {
 public:
  MoveValues() { for (auto& row : values_) row.fill(0.0); }

  double at(HanoiState s, HanoiState t) const { return values_[row(s)][slot(s, t)]; }
  double& at(HanoiState s, HanoiState t) { return values_[row(s)][slot(s, t)]; }

  /// Value of the i-th successor of `s` in legal_moves order.
  double at_slot(HanoiState s, int i) const { return values_[row(s)][static_cast<std::size_t>(i)]; }

  /// Largest value over legal_moves(s).
  double max_at(HanoiState s) const {
    const auto& r = values_[row(s)];
    auto n = legal_moves(s).size();
    return *std::max_element(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n));
  }

  template <typename Fn>
  void for_each_move(Fn&& fn) const {
    for (HanoiState s : enumerate_states()) {
      auto succ = legal_moves(s);
      for (std::size_t i = 0; i < succ.size(); ++i) fn(s, succ[i], values_[row(s)][i]);
    }
  }

  friend bool operator==(const MoveValues&, const MoveValues&) = default;

 private:
  static std::size_t row(HanoiState s) { return static_cast<std::size_t>(s.index()); }
  static std::size_t slot(HanoiState s, HanoiState t) {
    int i = successor_slot(s, t);
    if (i < 0) throw IllegalMoveError("illegal move " + s.str() + " -> " + t.str());
    return static_cast<std::size_t>(i);
  }

  std::array<std::array<double, kMaxSuccessors>, kNumStates> values_{};
};

}  // namespace hanoi_rl
