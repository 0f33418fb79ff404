#pragma once

// Three-disk Tower of Hanoi as a finite deterministic MDP.
//
// A state is the triple of pegs holding disks 1..3 (disk 1 smallest), written
// as a 3-digit string such as "111" or "223". Since disks sharing a peg are
// always stacked by size, the triple fully determines the configuration.

#include <array>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hanoi_rl {

inline constexpr int kDisks = 3;
inline constexpr int kPegs = 3;
inline constexpr int kNumStates = 27;
inline constexpr int kMaxSuccessors = 3;
inline constexpr double kGoalReward = 100.0;

class IllegalMoveError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// One of the 27 configurations. The index is the base-3 reading of the digit
/// string, so index order equals lexicographic order of the text form.
class HanoiState {
 public:
  constexpr HanoiState() = default;

  static constexpr HanoiState from_index(int index) {
    if (index < 0 || index >= kNumStates) throw std::out_of_range("state index out of range");
    return HanoiState(static_cast<std::uint8_t>(index));
  }

  static constexpr HanoiState from_pegs(std::array<int, kDisks> pegs) {
    int index = 0;
    for (int peg : pegs) {
      if (peg < 1 || peg > kPegs) throw std::invalid_argument("peg must be 1, 2 or 3");
      index = index * kPegs + (peg - 1);
    }
    return HanoiState(static_cast<std::uint8_t>(index));
  }

  static constexpr HanoiState parse(std::string_view text) {
    if (text.size() != kDisks) throw std::invalid_argument("state must have 3 digits: '" + std::string(text) + "'");
    std::array<int, kDisks> pegs{};
    for (int i = 0; i < kDisks; ++i) {
      char c = text[static_cast<std::size_t>(i)];
      if (c < '1' || c > '3') throw std::invalid_argument("state digits must be 1-3: '" + std::string(text) + "'");
      pegs[static_cast<std::size_t>(i)] = c - '0';
    }
    return from_pegs(pegs);
  }

  constexpr int index() const { return index_; }

  /// Peg (1..3) holding `disk` (1 = smallest).
  constexpr int peg_of(int disk) const {
    int shift = kDisks - disk;
    int value = index_;
    for (int i = 0; i < shift; ++i) value /= kPegs;
    return value % kPegs + 1;
  }

  std::string str() const {
    std::string out(kDisks, '0');
    for (int d = 1; d <= kDisks; ++d) out[static_cast<std::size_t>(d - 1)] = static_cast<char>('0' + peg_of(d));
    return out;
  }

  friend constexpr auto operator<=>(HanoiState, HanoiState) = default;

 private:
  constexpr explicit HanoiState(std::uint8_t index) : index_(index) {}
  std::uint8_t index_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, HanoiState s) { return os << s.str(); }

inline constexpr HanoiState kStartState = HanoiState::from_pegs({1, 1, 1});
inline constexpr HanoiState kGoalState = HanoiState::from_pegs({2, 2, 2});

struct Move {
  HanoiState from;
  HanoiState to;
  friend constexpr bool operator==(const Move&, const Move&) = default;
};

namespace detail {

struct SuccessorList {
  std::array<HanoiState, kMaxSuccessors> items{};
  int count = 0;
};

constexpr SuccessorList compute_successors(HanoiState s) {
  // Smallest disk on each peg, 0 if the peg is empty. Scanning from the
  // largest disk down leaves the smallest one in place.
  std::array<int, kPegs + 1> top{};
  for (int d = kDisks; d >= 1; --d) top[static_cast<std::size_t>(s.peg_of(d))] = d;

  SuccessorList out;
  std::array<bool, kNumStates> seen{};
  for (int from = 1; from <= kPegs; ++from) {
    int disk = top[static_cast<std::size_t>(from)];
    if (disk == 0) continue;
    for (int to = 1; to <= kPegs; ++to) {
      int dest_top = top[static_cast<std::size_t>(to)];
      if (to == from || (dest_top != 0 && dest_top < disk)) continue;
      std::array<int, kDisks> pegs{};
      for (int d = 1; d <= kDisks; ++d) pegs[static_cast<std::size_t>(d - 1)] = s.peg_of(d);
      pegs[static_cast<std::size_t>(disk - 1)] = to;
      seen[static_cast<std::size_t>(HanoiState::from_pegs(pegs).index())] = true;
    }
  }
  for (int i = 0; i < kNumStates; ++i) {
    if (seen[static_cast<std::size_t>(i)]) out.items[static_cast<std::size_t>(out.count++)] = HanoiState::from_index(i);
  }
  return out;
}

constexpr std::array<SuccessorList, kNumStates> build_successor_table() {
  std::array<SuccessorList, kNumStates> table{};
  for (int i = 0; i < kNumStates; ++i) table[static_cast<std::size_t>(i)] = compute_successors(HanoiState::from_index(i));
  return table;
}

inline constexpr auto kSuccessorTable = build_successor_table();

constexpr std::array<HanoiState, kNumStates> build_state_list() {
  std::array<HanoiState, kNumStates> states{};
  for (int i = 0; i < kNumStates; ++i) states[static_cast<std::size_t>(i)] = HanoiState::from_index(i);
  return states;
}

inline constexpr auto kStateList = build_state_list();

}  // namespace detail

/// All 27 states in lexicographic order; position equals HanoiState::index().
constexpr std::span<const HanoiState, kNumStates> enumerate_states() { return detail::kStateList; }

/// One-move successors of `s` in lexicographic order: 2 for a full tower, 3 otherwise.
constexpr std::span<const HanoiState> legal_moves(HanoiState s) {
  const auto& list = detail::kSuccessorTable[static_cast<std::size_t>(s.index())];
  return std::span<const HanoiState>(list.items.data(), static_cast<std::size_t>(list.count));
}

/// Position of `t` within legal_moves(s), or -1 when (s, t) is not a legal move.
constexpr int successor_slot(HanoiState s, HanoiState t) {
  auto succ = legal_moves(s);
  for (std::size_t i = 0; i < succ.size(); ++i) {
    if (succ[i] == t) return static_cast<int>(i);
  }
  return -1;
}

constexpr bool is_legal(HanoiState s, HanoiState t) { return successor_slot(s, t) >= 0; }

constexpr bool is_goal(HanoiState s) { return s == kGoalState; }

inline double reward(HanoiState s, HanoiState t) {
  if (!is_legal(s, t)) throw IllegalMoveError("illegal move " + s.str() + " -> " + t.str());
  return is_goal(t) ? kGoalReward : 0.0;
}

}  // namespace hanoi_rl
