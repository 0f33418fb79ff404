#pragma once

// When does the expert take the turn instead of the learner.

#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>

namespace hanoi_rl {

struct NoHelp {
  friend bool operator==(const NoHelp&, const NoHelp&) = default;
};

/// Turn taking: the learner moves first and the expert takes every period-th move.
struct Canonical {
  int period = 2;
  friend bool operator==(const Canonical&, const Canonical&) = default;
};

/// On demand: the expert moves whenever the learner's best value is strictly below threshold.
struct AskForHelp {
  double threshold = 26.0;
  friend bool operator==(const AskForHelp&, const AskForHelp&) = default;
};

using InterventionPolicy = std::variant<NoHelp, Canonical, AskForHelp>;

struct TurnContext {
  int turn_index = 0;  // moves already made in this episode
  double best_q_value = 0.0;
};

inline void validate(const InterventionPolicy& p) {
  if (auto* c = std::get_if<Canonical>(&p); c && c->period < 2)
    throw std::invalid_argument("canonical period must be at least 2");
  if (auto* a = std::get_if<AskForHelp>(&p); a && !(a->threshold >= 0.0 && a->threshold <= 100.0))
    throw std::invalid_argument("ask-for-help threshold must lie in [0, 100]");
}

inline bool should_intervene(const InterventionPolicy& p, const TurnContext& ctx) {
  return std::visit(
      [&](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, NoHelp>) {
          return false;
        } else if constexpr (std::is_same_v<T, Canonical>) {
          return ctx.turn_index % v.period == v.period - 1;
        } else {
          return ctx.best_q_value < v.threshold;
        }
      },
      p);
}

inline std::string describe(const InterventionPolicy& p) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, NoHelp>) {
          return "no-help";
        } else if constexpr (std::is_same_v<T, Canonical>) {
          return "canonical(period=" + std::to_string(v.period) + ")";
        } else {
          return "ask-for-help(threshold=" + std::to_string(v.threshold) + ")";
        }
      },
      p);
}

}  // namespace hanoi_rl
