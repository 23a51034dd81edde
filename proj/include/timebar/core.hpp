#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "timebar/image.hpp"

namespace timebar {

inline bool is_valid_seconds(double s) { return std::isfinite(s) && s >= 0.0; }

// Half-open [start, end) span of original-video time, in seconds.
// Zero-length intervals are rejected at construction.
struct Interval {
  double start;
  double end;

  Interval(double start_s, double end_s) : start(start_s), end(end_s) {
    if (!is_valid_seconds(start_s) || !is_valid_seconds(end_s))
      throw std::invalid_argument("interval bounds must be finite, non-negative seconds");
    if (!(start_s < end_s))
      throw std::invalid_argument("interval requires start < end");
  }

  double length() const { return end - start; }
  bool operator==(const Interval&) const = default;
};

// Sorted, pairwise-disjoint set of intervals; touching pairs are merged at
// normalization, so adjacency is never representable. The universal moment
// representation across the library.
class IntervalSet {
 public:
  IntervalSet() = default;

  static IntervalSet normalize(std::vector<Interval> intervals) {
    std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) {
      return a.start < b.start || (a.start == b.start && a.end < b.end);
    });
    IntervalSet out;
    for (const Interval& iv : intervals) {
      if (!out.intervals_.empty() && iv.start <= out.intervals_.back().end) {
        out.intervals_.back().end = std::max(out.intervals_.back().end, iv.end);
      } else {
        out.intervals_.push_back(iv);
      }
    }
    return out;
  }

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  size_t size() const { return intervals_.size(); }

  double total_length() const {
    double sum = 0.0;
    for (const Interval& iv : intervals_) sum += iv.length();
    return sum;
  }

  IntervalSet intersect(const IntervalSet& other) const {
    std::vector<Interval> out;
    size_t i = 0, j = 0;
    while (i < intervals_.size() && j < other.intervals_.size()) {
      const Interval& a = intervals_[i];
      const Interval& b = other.intervals_[j];
      double lo = std::max(a.start, b.start);
      double hi = std::min(a.end, b.end);
      if (lo < hi) out.emplace_back(lo, hi);
      if (a.end < b.end) ++i; else ++j;
    }
    IntervalSet r;
    r.intervals_ = std::move(out);
    return r;
  }

  // Restriction to [lo, hi]; intervals entirely outside are dropped.
  IntervalSet clamped(double lo, double hi) const {
    std::vector<Interval> out;
    for (const Interval& iv : intervals_) {
      double a = std::max(iv.start, lo);
      double b = std::min(iv.end, hi);
      if (a < b) out.emplace_back(a, b);
    }
    IntervalSet r;
    r.intervals_ = std::move(out);
    return r;
  }

  // Wire form: [[start,end],...] with seconds as decimal numbers.
  nlohmann::json to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const Interval& iv : intervals_) j.push_back({iv.start, iv.end});
    return j;
  }

  static IntervalSet from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("interval set JSON must be an array");
    std::vector<Interval> ivs;
    for (const auto& e : j) {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("interval JSON must be a [start,end] pair");
      ivs.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return normalize(std::move(ivs));
  }

  bool operator==(const IntervalSet&) const = default;

 private:
  std::vector<Interval> intervals_;
};

// |A ∩ B| / |A ∪ B| in seconds over the unions of each set.
// Both sets empty -> 0 (an empty prediction never scores).
inline double interval_iou(const IntervalSet& a, const IntervalSet& b) {
  double inter = a.intersect(b).total_length();
  double uni = a.total_length() + b.total_length() - inter;
  if (uni <= 0.0) return 0.0;
  return inter / uni;
}

// One video frame with its original-video timestamp.
struct Frame {
  Image pixels;
  double timestamp = 0.0;

  Frame() = default;
  Frame(Image img, double ts) : pixels(std::move(img)), timestamp(ts) {
    if (pixels.width < 1 || pixels.height < 1)
      throw std::invalid_argument("frame must have positive dimensions");
    if (!is_valid_seconds(ts))
      throw std::invalid_argument("frame timestamp must be finite, non-negative seconds");
  }
};

// Ordered frames plus the duration of the video they came from. Timestamps
// stay in original-video time even when the sequence covers a sub-window.
class FrameSequence {
 public:
  FrameSequence() = default;
  FrameSequence(std::vector<Frame> frames, double source_duration)
      : frames_(std::move(frames)), source_duration_(source_duration) {
    if (!is_valid_seconds(source_duration) || source_duration <= 0.0)
      throw std::invalid_argument("source duration must be positive");
    for (size_t i = 0; i < frames_.size(); ++i) {
      if (frames_[i].timestamp > source_duration_)
        throw std::invalid_argument("frame timestamp exceeds source duration");
      if (i > 0 && !(frames_[i - 1].timestamp < frames_[i].timestamp))
        throw std::invalid_argument("frame timestamps must be strictly increasing");
    }
  }

  const std::vector<Frame>& frames() const { return frames_; }
  double source_duration() const { return source_duration_; }
  bool empty() const { return frames_.empty(); }
  size_t size() const { return frames_.size(); }
  auto begin() const { return frames_.begin(); }
  auto end() const { return frames_.end(); }

 private:
  std::vector<Frame> frames_;
  double source_duration_ = 0.0;
};

// The session's current frame set (the dynamic video memory). Updates replace
// the frames wholesale and append to the lineage; values are immutable.
struct VideoMemory {
  FrameSequence current;
  uint64_t version = 0;
  std::vector<std::string> lineage;  // lineage[i] produced version i+1

  static VideoMemory initial(FrameSequence frames) {
    if (frames.empty()) throw std::invalid_argument("initial video memory cannot be empty");
    return VideoMemory{std::move(frames), 0, {}};
  }
};

inline VideoMemory memory_update(const VideoMemory& memory, FrameSequence frames,
                                 const std::string& cause) {
  if (frames.empty()) throw std::invalid_argument("memory update rejects an empty frame sequence");
  VideoMemory next{std::move(frames), memory.version + 1, memory.lineage};
  next.lineage.push_back(cause);
  return next;
}

}  // namespace timebar
