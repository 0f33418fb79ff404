#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hanoi_rl/experiment.hpp"
#include "hanoi_rl/move_values.hpp"

namespace hanoi_rl::reporting {

inline constexpr const char* kCurveHeader = "episodes,mean_moves,stddev_moves,mean_expert_moves";

inline std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

inline std::string format_csv(const std::vector<CurvePoint>& points) {
  if (points.empty()) throw std::invalid_argument("no curve points to write");
  std::string out = kCurveHeader;
  out += '\n';
  for (const auto& p : points) {
    out += std::to_string(p.episodes_trained) + ',' + fixed6(p.mean_moves) + ',' + fixed6(p.stddev_moves) + ',' +
           fixed6(p.mean_expert_moves) + '\n';
  }
  return out;
}

/// Inverse of format_csv for the four emitted columns; the census is not serialized.
inline std::vector<CurvePoint> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCurveHeader) throw std::invalid_argument("missing or unexpected CSV header");
  std::vector<CurvePoint> points;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    CurvePoint p;
    char tail = 0;
    if (std::sscanf(line.c_str(), "%d,%lf,%lf,%lf%c", &p.episodes_trained, &p.mean_moves, &p.stddev_moves,
                    &p.mean_expert_moves, &tail) != 4)
      throw std::invalid_argument("malformed CSV row: " + line);
    points.push_back(p);
  }
  return points;
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

inline void write_csv(const std::vector<CurvePoint>& points, const std::filesystem::path& path) {
  write_text(path, format_csv(points));
}

/// Rows of from,to,q for every legal move.
inline std::string format_qtable(const MoveValues& q) {
  std::string out = "from,to,q\n";
  q.for_each_move([&](HanoiState s, HanoiState t, double v) { out += s.str() + ',' + t.str() + ',' + fixed6(v) + '\n'; });
  return out;
}

inline std::string format_distances(const DistanceMap& d) {
  std::string out = "state,distance\n";
  for (HanoiState s : enumerate_states()) out += s.str() + ',' + std::to_string(d[s]) + '\n';
  return out;
}

inline std::string format_census(const VisitCensus& census) {
  std::string out = "state,visits\n";
  for (HanoiState s : enumerate_states())
    out += s.str() + ',' + std::to_string(census[static_cast<std::size_t>(s.index())]) + '\n';
  return out;
}

}  // namespace hanoi_rl::reporting
