// Text form of chips: W<n>:<pairs>;<circles>, e.g. W3:1-2,1'-2',3-3';0.
// Pins are 1-based, a trailing apostrophe marks a right pin. Input is
// whitespace-insensitive and unordered; output is canonical (each pair and
// the pair list sorted by pin number, unprimed before primed).
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diagmon/chip.hpp"
#include "diagmon/parse_util.hpp"

namespace diagmon {
namespace detail {

// Pin display order: by number, unprimed before primed.
inline int pin_sort_key(int n, int pin) {
  return 2 * (pin_number(n, pin) - 1) + (pin_is_right(n, pin) ? 1 : 0);
}

inline int parse_pin(Cursor& cur, int n) {
  const std::size_t col = cur.column();
  const std::uint64_t num = cur.integer();
  if (num < 1 || num > static_cast<std::uint64_t>(n))
    throw ParseError("pin number out of range 1.." + std::to_string(n), col);
  const bool primed = cur.accept('\'');
  const int i = static_cast<int>(num);
  return primed ? right_pin(n, i) : left_pin(n, i);
}

inline std::string format_pin(int n, int pin) {
  std::string out = std::to_string(pin_number(n, pin));
  if (pin_is_right(n, pin)) out += '\'';
  return out;
}

}  // namespace detail

inline Chip parse_chip(std::string_view text) {
  detail::Cursor cur(text);
  if (cur.peek() != 'W' && cur.peek() != 'w')
    throw ParseError("chip literal must start with 'W'", cur.column());
  cur.accept('W') || cur.accept('w');
  const std::size_t ncol = cur.column();
  const std::uint64_t nval = cur.integer();
  if (nval < 1 || nval > 10000) throw ParseError("degree out of range", ncol);
  const int n = static_cast<int>(nval);
  cur.expect(':');
  std::vector<std::pair<int, int>> blocks;
  do {
    const int a = detail::parse_pin(cur, n);
    cur.expect('-');
    const int b = detail::parse_pin(cur, n);
    blocks.emplace_back(a, b);
  } while (cur.accept(','));
  cur.expect(';');
  const std::uint64_t d = cur.integer();
  if (!cur.done()) throw ParseError("trailing input after chip literal", cur.column());
  try {
    return new_chip(n, blocks, d);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), cur.column());
  }
}

inline std::string format_chip(const Chip& chip) {
  const int n = chip.degree();
  std::string out = "W" + std::to_string(n) + ":";
  bool first = true;
  for (const auto& [a, b] : chip.matching.blocks()) {
    if (!first) out += ',';
    first = false;
    out += detail::format_pin(n, a);
    out += '-';
    out += detail::format_pin(n, b);
  }
  out += ';';
  out += std::to_string(chip.circles);
  return out;
}

inline std::string format_matching(const Matching& m) {
  return format_chip(Chip{m, 0});
}

}  // namespace diagmon
