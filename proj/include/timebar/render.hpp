#pragma once

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "timebar/core.hpp"
#include "timebar/font.hpp"
#include "timebar/util.hpp"

namespace timebar {

// Strip layout, top to bottom (rows relative to the first appended row):
//
//   +2                 current-timestamp label, centered above the marker,
//                      clamped so it never leaves the frame horizontally
//   +2                 gap
//   track zone         track rectangle with the filled position marker on it;
//                      highlight bands overpaint a thickened slice of it
//   +2                 gap
//   bottom labels      "0" under the left track end, total duration under
//                      the right track end
//
// All text comes from the embedded bitmap font at a fixed x2 scale, so the
// raster is byte-identical across platforms.

constexpr int kLabelScale = 2;

struct BarStyle {
  int bar_strip_height = 60;
  double track_margin_frac = 0.05;
  int track_thickness = 8;
  Rgb track_color{200, 200, 200};
  Rgb marker_color{230, 60, 60};
  Rgb highlight_color{60, 200, 90};
  Rgb label_color{255, 255, 255};
  Rgb background_color{0, 0, 0};
  int marker_radius = 7;
  enum class TimestampFormat { IntegerSeconds, OneDecimal };
  TimestampFormat timestamp_format = TimestampFormat::IntegerSeconds;

  void validate() const {
    if (highlight_color == track_color)
      throw std::invalid_argument("highlight color must differ from track color");
    if (marker_color == track_color)
      throw std::invalid_argument("marker color must differ from track color");
    if (track_thickness < 1 || marker_radius < 1)
      throw std::invalid_argument("track thickness and marker radius must be >= 1");
    if (track_margin_frac < 0.0 || track_margin_frac > 0.45)
      throw std::invalid_argument("track margin fraction must be in [0, 0.45]");
    int label_h = text_height(kLabelScale);
    if (bar_strip_height < track_thickness + 2 * marker_radius + label_h)
      throw std::invalid_argument("strip height below track + marker + label minimum");
    int half_zone = std::max(marker_radius, (track_thickness + 1) / 2);
    if (2 + label_h + 2 + 2 * half_zone + 2 + label_h > bar_strip_height)
      throw std::invalid_argument("strip height too small for the label layout");
  }
};

struct BarGeometry {
  int track_x0 = 0;
  int track_x1 = 0;
  int track_y = 0;   // center row of the track, absolute image coordinates
  int strip_y0 = 0;  // first row of the appended strip
};

inline BarGeometry bar_geometry(int frame_width, int content_height, const BarStyle& style) {
  if (frame_width < 64)
    throw std::invalid_argument("frame too narrow for labels (< 64 px)");
  int margin = round_half_up(style.track_margin_frac * frame_width);
  BarGeometry geom;
  geom.track_x0 = margin;
  geom.track_x1 = std::min(frame_width - margin, frame_width - 1);
  geom.strip_y0 = content_height;
  int half_zone = std::max(style.marker_radius, (style.track_thickness + 1) / 2);
  geom.track_y = content_height + 2 + text_height(kLabelScale) + 2 + half_zone;
  if (geom.track_x0 >= geom.track_x1)
    throw std::invalid_argument("frame too narrow for labels (< 64 px)");
  return geom;
}

// Pixel column of the position marker for time t; round-half-up, monotone in t.
inline int marker_x(double t, double duration, const BarGeometry& geom) {
  if (!(duration > 0.0)) throw std::invalid_argument("marker_x requires duration > 0");
  if (t < 0.0 || t > duration)
    throw std::invalid_argument("marker_x requires 0 <= t <= duration");
  return round_half_up(geom.track_x0 + (t / duration) * (geom.track_x1 - geom.track_x0));
}

namespace detail {

inline std::string format_label(double t, BarStyle::TimestampFormat fmt) {
  if (fmt == BarStyle::TimestampFormat::IntegerSeconds)
    return std::to_string(static_cast<long long>(std::llround(t)));
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.1f", t);
  return buf;
}

inline void draw_centered_label(Image& img, int center_x, int y, const std::string& text,
                                Rgb color) {
  int w = text_width(text, kLabelScale);
  int x = center_x - w / 2;
  x = std::max(0, std::min(x, img.width - w));
  draw_text(img, x, y, text, color, kLabelScale);
}

// Repaints the whole strip region [strip_y0, strip_y0 + strip_height).
inline void paint_strip(Image& img, double t, double duration, const IntervalSet& moments,
                        const BarStyle& style, const BarGeometry& geom) {
  int strip_y1 = geom.strip_y0 + style.bar_strip_height - 1;
  fill_rect(img, 0, geom.strip_y0, img.width - 1, strip_y1, style.background_color);

  int track_top = geom.track_y - style.track_thickness / 2;
  fill_rect(img, geom.track_x0, track_top, geom.track_x1,
            track_top + style.track_thickness - 1, style.track_color);

  int band_h = style.track_thickness + 6;
  int band_top = geom.track_y - band_h / 2;
  for (const Interval& iv : moments.intervals()) {
    int xa = marker_x(iv.start, duration, geom);
    int xb = marker_x(iv.end, duration, geom);
    fill_rect(img, xa, band_top, xb, band_top + band_h - 1, style.highlight_color);
  }

  int mx = marker_x(t, duration, geom);
  fill_circle(img, mx, geom.track_y, style.marker_radius, style.marker_color);

  int half_zone = std::max(style.marker_radius, (style.track_thickness + 1) / 2);
  int bottom_y = geom.track_y + half_zone + 2;
  draw_centered_label(img, geom.track_x0, bottom_y, "0", style.label_color);
  draw_centered_label(img, geom.track_x1, bottom_y,
                      format_label(duration, style.timestamp_format), style.label_color);
  draw_centered_label(img, mx, geom.strip_y0 + 2, format_label(t, style.timestamp_format),
                      style.label_color);
}

inline FrameSequence render_with_moments(const FrameSequence& frames, const IntervalSet& moments,
                                         const BarStyle& style, bool frames_have_bar) {
  if (frames.empty()) throw std::invalid_argument("cannot render an empty frame sequence");
  style.validate();
  double duration = frames.source_duration();
  for (const Interval& iv : moments.intervals())
    if (iv.end > duration)
      throw std::invalid_argument("highlight interval outside [0, duration]");

  std::vector<Frame> out;
  out.reserve(frames.size());
  for (const Frame& f : frames) {
    const Image& in = f.pixels;
    if (frames_have_bar) {
      if (in.height <= style.bar_strip_height)
        throw std::invalid_argument("frames marked as carrying a bar are too short");
      Image img = in;
      BarGeometry geom = bar_geometry(in.width, in.height - style.bar_strip_height, style);
      paint_strip(img, f.timestamp, duration, moments, style, geom);
      out.emplace_back(std::move(img), f.timestamp);
    } else {
      Image img(in.width, in.height + style.bar_strip_height);
      std::copy(in.data.begin(), in.data.end(), img.data.begin());
      BarGeometry geom = bar_geometry(in.width, in.height, style);
      paint_strip(img, f.timestamp, duration, moments, style, geom);
      out.emplace_back(std::move(img), f.timestamp);
    }
  }
  return FrameSequence(std::move(out), duration);
}

}  // namespace detail

// Appends the progress-bar strip beneath every frame; rows above it are
// copied bit-exactly.
inline FrameSequence render_progress_bar(const FrameSequence& frames, const BarStyle& style = {}) {
  return detail::render_with_moments(frames, IntervalSet{}, style, false);
}

// Tints the track slice covering each moment. `frames_have_bar` says whether
// the inputs already end in a strip (then it is repainted in place) or are
// raw frames (then the bar is drawn first).
inline FrameSequence render_highlights(const FrameSequence& frames, const IntervalSet& moments,
                                       const BarStyle& style = {}, bool frames_have_bar = false) {
  return detail::render_with_moments(frames, moments, style, frames_have_bar);
}

// Strip-only raster for one timestamp; the CLI writes this next to annotated
// frames for debugging.
inline Image render_strip_image(int width, double t, double duration, const IntervalSet& moments,
                                const BarStyle& style = {}) {
  style.validate();
  Image img(width, style.bar_strip_height);
  BarGeometry geom = bar_geometry(width, 0, style);
  detail::paint_strip(img, t, duration, moments, style, geom);
  return img;
}

}  // namespace timebar
