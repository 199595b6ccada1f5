// Chip pictures: an ASCII box-drawing layout with one row per pin, and an
// SVG with cubic wires. Circles beyond the available free space spill onto
// the annotation line.
#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "diagmon/chip.hpp"

namespace diagmon {
namespace detail {

// Stroke bits per cell; glyphs are picked from the combined mask.
enum : unsigned { kN = 1, kS = 2, kE = 4, kW = 8 };

inline const char* stroke_glyph(unsigned mask) {
  switch (mask) {
    case 0: return " ";
    case kN: case kS: case kN | kS: return "│";
    case kE: case kW: case kE | kW: return "─";
    case kN | kE: return "└";
    case kN | kW: return "┘";
    case kS | kE: return "┌";
    case kS | kW: return "┐";
    case kN | kS | kE: return "├";
    case kN | kS | kW: return "┤";
    case kE | kW | kN: return "┴";
    case kE | kW | kS: return "┬";
    default: return "┼";
  }
}

struct AsciiCanvas {
  int rows, cols;
  std::vector<unsigned> mask;
  std::vector<char> overlay;

  AsciiCanvas(int r, int c) : rows(r), cols(c), mask(static_cast<std::size_t>(r * c), 0),
                              overlay(static_cast<std::size_t>(r * c), '\0') {}

  unsigned& at(int r, int c) { return mask[static_cast<std::size_t>(r * cols + c)]; }

  void horizontal(int row, int c1, int c2) {
    for (int c = c1; c < c2; ++c) {
      at(row, c) |= kE;
      at(row, c + 1) |= kW;
    }
  }
  void vertical(int col, int r1, int r2) {
    for (int r = r1; r < r2; ++r) {
      at(r, col) |= kS;
      at(r + 1, col) |= kN;
    }
  }
};

}  // namespace detail

inline std::string render_ascii(const Chip& chip) {
  const int n = chip.degree();
  const Matching& m = chip.matching;

  struct Arc {
    int a, b;  // rows, a < b
  };
  std::vector<Arc> lefts, rights;
  std::vector<std::pair<int, int>> slants;  // left row -> right row
  std::vector<int> straights;
  for (const auto& [x, y] : m.blocks()) {
    const WireKind kind = wire_kind(m, {x, y});
    if (kind == WireKind::l_wire) {
      lefts.push_back(Arc{std::min(x, y), std::max(x, y)});
    } else if (kind == WireKind::r_wire) {
      rights.push_back(Arc{std::min(x, y) - n, std::max(x, y) - n});
    } else {
      const int l = pin_is_right(n, x) ? y : x;
      const int r = (pin_is_right(n, x) ? x : y) - n;
      if (l == r)
        straights.push_back(l);
      else
        slants.emplace_back(l, r);
    }
  }
  const auto by_span = [](const Arc& u, const Arc& v) { return u.b - u.a < v.b - v.a; };
  std::stable_sort(lefts.begin(), lefts.end(), by_span);
  std::stable_sort(rights.begin(), rights.end(), by_span);

  const int left_zone = 2 * static_cast<int>(lefts.size());
  const int right_zone = 2 * static_cast<int>(rights.size());
  const int mid_zone = 2 * static_cast<int>(slants.size()) + 5;
  const int cols = 1 + left_zone + mid_zone + right_zone + 1;
  detail::AsciiCanvas canvas(n, cols);

  for (std::size_t i = 0; i < lefts.size(); ++i) {
    const int depth = 1 + 2 * static_cast<int>(i);
    canvas.horizontal(lefts[i].a, 0, depth);
    canvas.vertical(depth, lefts[i].a, lefts[i].b);
    canvas.horizontal(lefts[i].b, 0, depth);
  }
  for (std::size_t i = 0; i < rights.size(); ++i) {
    const int depth = cols - 2 - 2 * static_cast<int>(i);
    canvas.horizontal(rights[i].a, depth, cols - 1);
    canvas.vertical(depth, rights[i].a, rights[i].b);
    canvas.horizontal(rights[i].b, depth, cols - 1);
  }
  for (std::size_t i = 0; i < slants.size(); ++i) {
    const int jog = 1 + left_zone + 2 + 2 * static_cast<int>(i);
    const auto [a, b] = slants[i];
    canvas.horizontal(a, 0, jog);
    canvas.vertical(jog, std::min(a, b), std::max(a, b));
    canvas.horizontal(b, jog, cols - 1);
  }
  for (int row : straights) canvas.horizontal(row, 0, cols - 1);

  // Place circle glyphs in free cells near the middle, center rows first.
  std::uint64_t placed = 0;
  std::vector<int> row_order;
  for (int offset = 0; offset <= n; ++offset) {
    const int up = n / 2 - offset, down = n / 2 + offset;
    if (up >= 0 && up < n) row_order.push_back(up);
    if (down != up && down >= 0 && down < n) row_order.push_back(down);
  }
  const int mid_start = 1 + left_zone + 1;
  for (int r : row_order) {
    for (int c = mid_start; c + 1 < cols - right_zone && placed < chip.circles; c += 2) {
      if (canvas.at(r, c) == 0) {
        canvas.overlay[static_cast<std::size_t>(r * cols + c)] = 'o';
        ++placed;
      }
    }
    if (placed == chip.circles) break;
  }

  std::string out;
  for (int r = 0; r < n; ++r) {
    std::string line;
    for (int c = 0; c < cols; ++c) {
      const char over = canvas.overlay[static_cast<std::size_t>(r * cols + c)];
      if (over != '\0')
        line += over;
      else
        line += detail::stroke_glyph(canvas.at(r, c));
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  out += "circles: " + std::to_string(chip.circles);
  for (std::uint64_t i = placed; i < chip.circles; ++i) out += " o";
  out += '\n';
  return out;
}

inline std::string render_svg(const Chip& chip) {
  const int n = chip.degree();
  const Matching& m = chip.matching;
  const int spacing = 24, margin = 24;
  const int left_x = 60, right_x = 300;
  const int height = 2 * margin + (n - 1) * spacing;
  const auto y_of = [&](int row) { return margin + row * spacing; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"360\" height=\"" +
         std::to_string(height + margin) + "\" viewBox=\"0 0 360 " + std::to_string(height + margin) + "\">\n";
  svg += "<rect x=\"" + std::to_string(left_x) + "\" y=\"" + std::to_string(margin / 2) + "\" width=\"" +
         std::to_string(right_x - left_x) + "\" height=\"" + std::to_string(height) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  for (int j = 0; j < n; ++j) {
    svg += "<line x1=\"" + std::to_string(left_x - 8) + "\" y1=\"" + std::to_string(y_of(j)) + "\" x2=\"" +
           std::to_string(left_x) + "\" y2=\"" + std::to_string(y_of(j)) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + std::to_string(right_x) + "\" y1=\"" + std::to_string(y_of(j)) + "\" x2=\"" +
           std::to_string(right_x + 8) + "\" y2=\"" + std::to_string(y_of(j)) + "\" stroke=\"black\"/>\n";
  }

  int left_arcs = 0, right_arcs = 0;
  for (const auto& [x, y] : m.blocks()) {
    const WireKind kind = wire_kind(m, {x, y});
    if (kind == WireKind::t_wire) {
      const int l = pin_is_right(n, x) ? y : x;
      const int r = (pin_is_right(n, x) ? x : y) - n;
      svg += "<path d=\"M " + std::to_string(left_x) + " " + std::to_string(y_of(l)) + " C " +
             std::to_string(left_x + 80) + " " + std::to_string(y_of(l)) + ", " +
             std::to_string(right_x - 80) + " " + std::to_string(y_of(r)) + ", " +
             std::to_string(right_x) + " " + std::to_string(y_of(r)) +
             "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    } else if (kind == WireKind::l_wire) {
      const int bulge = 40 + 14 * left_arcs++;
      svg += "<path d=\"M " + std::to_string(left_x) + " " + std::to_string(y_of(std::min(x, y))) + " C " +
             std::to_string(left_x + bulge) + " " + std::to_string(y_of(std::min(x, y))) + ", " +
             std::to_string(left_x + bulge) + " " + std::to_string(y_of(std::max(x, y))) + ", " +
             std::to_string(left_x) + " " + std::to_string(y_of(std::max(x, y))) +
             "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    } else {
      const int a = std::min(x, y) - n, b = std::max(x, y) - n;
      const int bulge = 40 + 14 * right_arcs++;
      svg += "<path d=\"M " + std::to_string(right_x) + " " + std::to_string(y_of(a)) + " C " +
             std::to_string(right_x - bulge) + " " + std::to_string(y_of(a)) + ", " +
             std::to_string(right_x - bulge) + " " + std::to_string(y_of(b)) + ", " +
             std::to_string(right_x) + " " + std::to_string(y_of(b)) +
             "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
  }

  const int cx = (left_x + right_x) / 2, cy = margin / 2 + height / 2;
  for (std::uint64_t i = 0; i < chip.circles; ++i) {
    const int offset = static_cast<int>(i) - static_cast<int>(chip.circles - 1) / 2;
    svg += "<circle cx=\"" + std::to_string(cx + 18 * offset) + "\" cy=\"" + std::to_string(cy) +
           "\" r=\"6\" fill=\"none\" stroke=\"black\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace diagmon
