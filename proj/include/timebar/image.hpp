#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "timebar/util.hpp"

namespace timebar {

struct Rgb {
  uint8_t r = 0, g = 0, b = 0;
  bool operator==(const Rgb&) const = default;
};

// 8-bit RGB raster, row-major, 3 bytes per pixel.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> data;

  Image() = default;
  Image(int w, int h, Rgb fill = {0, 0, 0}) : width(w), height(h) {
    if (w < 1 || h < 1) throw std::invalid_argument("image dimensions must be >= 1");
    data.resize(static_cast<size_t>(w) * h * 3);
    for (size_t i = 0; i < data.size(); i += 3) {
      data[i] = fill.r;
      data[i + 1] = fill.g;
      data[i + 2] = fill.b;
    }
  }

  size_t offset(int x, int y) const {
    assert(x >= 0 && x < width && y >= 0 && y < height);
    return (static_cast<size_t>(y) * width + x) * 3;
  }
  Rgb at(int x, int y) const {
    size_t o = offset(x, y);
    return {data[o], data[o + 1], data[o + 2]};
  }
  void set(int x, int y, Rgb c) {
    size_t o = offset(x, y);
    data[o] = c.r;
    data[o + 1] = c.g;
    data[o + 2] = c.b;
  }

  bool operator==(const Image&) const = default;
};

inline void fill_rect(Image& img, int x0, int y0, int x1, int y1, Rgb c) {
  x0 = std::max(x0, 0);
  y0 = std::max(y0, 0);
  x1 = std::min(x1, img.width - 1);
  y1 = std::min(y1, img.height - 1);
  for (int y = y0; y <= y1; ++y)
    for (int x = x0; x <= x1; ++x) img.set(x, y, c);
}

inline void fill_circle(Image& img, int cx, int cy, int radius, Rgb c) {
  for (int dy = -radius; dy <= radius; ++dy)
    for (int dx = -radius; dx <= radius; ++dx)
      if (dx * dx + dy * dy <= radius * radius) {
        int x = cx + dx, y = cy + dy;
        if (x >= 0 && x < img.width && y >= 0 && y < img.height) img.set(x, y, c);
      }
}

// Nearest-neighbour resize; integer source mapping keeps output identical
// across platforms.
inline Image resize(const Image& src, int w, int h) {
  if (w < 1 || h < 1) throw std::invalid_argument("resize target must be >= 1x1");
  if (w == src.width && h == src.height) return src;
  Image out(w, h);
  for (int y = 0; y < h; ++y) {
    int sy = std::min(src.height - 1,
                      static_cast<int>((static_cast<int64_t>(y) * 2 + 1) * src.height / (2 * h)));
    for (int x = 0; x < w; ++x) {
      int sx = std::min(src.width - 1,
                        static_cast<int>((static_cast<int64_t>(x) * 2 + 1) * src.width / (2 * w)));
      out.set(x, y, src.at(sx, sy));
    }
  }
  return out;
}

// Scale so max(W,H) == long_side, aspect preserved, short side rounded half-up.
inline Image resize_to_long_side(const Image& src, int long_side) {
  if (long_side < 1) throw std::invalid_argument("long_side must be >= 1");
  int w, h;
  if (src.width >= src.height) {
    w = long_side;
    h = std::max(1, round_half_up(static_cast<double>(src.height) * long_side / src.width));
  } else {
    h = long_side;
    w = std::max(1, round_half_up(static_cast<double>(src.width) * long_side / src.height));
  }
  return resize(src, w, h);
}

}  // namespace timebar
