#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "timebar/image.hpp"

namespace timebar {

// Embedded 5x7 bitmap glyphs (digits plus the few punctuation marks the bar
// labels use). Rendering from a fixed table keeps rasters byte-identical on
// every platform; glyphs are scaled up so MLLM OCR can read them.
namespace font {

constexpr int kGlyphW = 5;
constexpr int kGlyphH = 7;
constexpr int kAdvance = kGlyphW + 1;

struct Glyph {
  char ch;
  std::array<uint8_t, 7> rows;  // 5 bits per row, MSB = leftmost column
};

constexpr Glyph kGlyphs[] = {
    {'0', {0b01110, 0b10001, 0b10011, 0b10101, 0b11001, 0b10001, 0b01110}},
    {'1', {0b00100, 0b01100, 0b00100, 0b00100, 0b00100, 0b00100, 0b01110}},
    {'2', {0b01110, 0b10001, 0b00001, 0b00010, 0b00100, 0b01000, 0b11111}},
    {'3', {0b11111, 0b00010, 0b00100, 0b00010, 0b00001, 0b10001, 0b01110}},
    {'4', {0b00010, 0b00110, 0b01010, 0b10010, 0b11111, 0b00010, 0b00010}},
    {'5', {0b11111, 0b10000, 0b11110, 0b00001, 0b00001, 0b10001, 0b01110}},
    {'6', {0b00110, 0b01000, 0b10000, 0b11110, 0b10001, 0b10001, 0b01110}},
    {'7', {0b11111, 0b00001, 0b00010, 0b00100, 0b01000, 0b01000, 0b01000}},
    {'8', {0b01110, 0b10001, 0b10001, 0b01110, 0b10001, 0b10001, 0b01110}},
    {'9', {0b01110, 0b10001, 0b10001, 0b01111, 0b00001, 0b00010, 0b01100}},
    {'.', {0b00000, 0b00000, 0b00000, 0b00000, 0b00000, 0b01100, 0b01100}},
    {'-', {0b00000, 0b00000, 0b00000, 0b11111, 0b00000, 0b00000, 0b00000}},
    {':', {0b00000, 0b01100, 0b01100, 0b00000, 0b01100, 0b01100, 0b00000}},
    {'s', {0b00000, 0b00000, 0b01111, 0b10000, 0b01110, 0b00001, 0b11110}},
    {' ', {0b00000, 0b00000, 0b00000, 0b00000, 0b00000, 0b00000, 0b00000}},
};

constexpr const Glyph* find(char c) {
  for (const auto& g : kGlyphs)
    if (g.ch == c) return &g;
  return nullptr;
}

}  // namespace font

inline int text_width(std::string_view text, int scale) {
  if (text.empty()) return 0;
  return static_cast<int>(text.size()) * font::kAdvance * scale - scale;
}

inline int text_height(int scale) { return font::kGlyphH * scale; }

// Draws text with its top-left corner at (x, y); pixels outside the image
// are clipped. Characters without a glyph render as a hollow box.
inline void draw_text(Image& img, int x, int y, std::string_view text, Rgb color, int scale = 2) {
  int cx = x;
  for (char c : text) {
    const font::Glyph* g = font::find(c);
    for (int row = 0; row < font::kGlyphH; ++row) {
      uint8_t bits = g ? g->rows[row]
                       : (row == 0 || row == font::kGlyphH - 1 ? 0b11111 : 0b10001);
      for (int col = 0; col < font::kGlyphW; ++col) {
        if (!(bits & (1 << (font::kGlyphW - 1 - col)))) continue;
        for (int dy = 0; dy < scale; ++dy)
          for (int dx = 0; dx < scale; ++dx) {
            int px = cx + col * scale + dx;
            int py = y + row * scale + dy;
            if (px >= 0 && px < img.width && py >= 0 && py < img.height)
              img.set(px, py, color);
          }
      }
    }
    cx += font::kAdvance * scale;
  }
}

}  // namespace timebar
