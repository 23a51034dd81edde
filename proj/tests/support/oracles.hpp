#pragma once

// Independent reference implementations used only by tests. These must stay
// structurally different from the library code paths they check: membership
// scans over raw interval lists instead of merged sweeps, full sorts instead
// of selection, grid rasterization instead of closed-form measures.

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace timebar::testing {

struct RawInterval {
  double start;
  double end;
};

inline bool point_in_any(double x, const std::vector<RawInterval>& ivs) {
  for (const auto& iv : ivs)
    if (x >= iv.start && x < iv.end) return true;
  return false;
}

// Endpoint-event sweep: splits the line at every endpoint of either list and
// classifies each elementary segment by midpoint membership.
inline double sweep_iou(const std::vector<RawInterval>& a, const std::vector<RawInterval>& b) {
  std::vector<double> points;
  for (const auto& iv : a) {
    points.push_back(iv.start);
    points.push_back(iv.end);
  }
  for (const auto& iv : b) {
    points.push_back(iv.start);
    points.push_back(iv.end);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  double inter = 0.0, uni = 0.0;
  for (size_t i = 0; i + 1 < points.size(); ++i) {
    double len = points[i + 1] - points[i];
    if (len <= 0.0) continue;
    double mid = points[i] + len / 2.0;
    bool in_a = point_in_any(mid, a);
    bool in_b = point_in_any(mid, b);
    if (in_a && in_b) inter += len;
    if (in_a || in_b) uni += len;
  }
  if (uni <= 0.0) return 0.0;
  return inter / uni;
}

inline double sweep_union_length(const std::vector<RawInterval>& a) {
  std::vector<double> points;
  for (const auto& iv : a) {
    points.push_back(iv.start);
    points.push_back(iv.end);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  double uni = 0.0;
  for (size_t i = 0; i + 1 < points.size(); ++i) {
    double mid = points[i] + (points[i + 1] - points[i]) / 2.0;
    if (point_in_any(mid, a)) uni += points[i + 1] - points[i];
  }
  return uni;
}

// 1 ms grid rasterization of IoU; exact when endpoints sit on grid cells.
inline double grid_iou(const std::vector<RawInterval>& a, const std::vector<RawInterval>& b,
                       double duration, double grid = 0.001) {
  int64_t cells = static_cast<int64_t>(duration / grid + 0.5);
  int64_t inter = 0, uni = 0;
  for (int64_t c = 0; c < cells; ++c) {
    double mid = (static_cast<double>(c) + 0.5) * grid;
    bool in_a = point_in_any(mid, a);
    bool in_b = point_in_any(mid, b);
    if (in_a && in_b) ++inter;
    if (in_a || in_b) ++uni;
  }
  if (uni == 0) return 0.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

struct RawScore {
  int clip_index;
  double similarity;
};

// Full sort + linear adjacency merge, kept independent of the library's
// selection path. Returns [start,end) spans in seconds.
inline std::vector<RawInterval> topk_oracle(std::vector<RawScore> scores, int k, int clip_len,
                                            double fps, double duration) {
  std::sort(scores.begin(), scores.end(), [](const RawScore& x, const RawScore& y) {
    if (x.similarity != y.similarity) return x.similarity > y.similarity;
    return x.clip_index < y.clip_index;
  });
  size_t take = std::min<size_t>(static_cast<size_t>(k), scores.size());
  std::vector<int> chosen;
  for (size_t i = 0; i < take; ++i) chosen.push_back(scores[i].clip_index);
  std::sort(chosen.begin(), chosen.end());

  std::vector<RawInterval> out;
  size_t i = 0;
  while (i < chosen.size()) {
    size_t j = i;
    while (j + 1 < chosen.size() && chosen[j + 1] == chosen[j] + 1) ++j;
    double start = chosen[i] * clip_len / fps;
    double end = std::min(duration, (chosen[j] + 1) * clip_len / fps);
    if (start < end) out.push_back({start, end});
    i = j + 1;
  }
  return out;
}

inline std::vector<RawInterval> random_intervals(std::mt19937& rng, int max_count,
                                                 double max_end, bool millisecond_grid = false) {
  std::uniform_int_distribution<int> count_dist(0, max_count);
  std::uniform_real_distribution<double> point(0.0, max_end);
  int n = count_dist(rng);
  std::vector<RawInterval> out;
  for (int i = 0; i < n; ++i) {
    double a = point(rng), b = point(rng);
    if (a > b) std::swap(a, b);
    if (millisecond_grid) {
      a = std::floor(a * 1000.0) / 1000.0;
      b = std::floor(b * 1000.0) / 1000.0;
    }
    if (a == b) b = a + (millisecond_grid ? 0.001 : 1e-6);
    out.push_back({a, b});
  }
  return out;
}

}  // namespace timebar::testing
