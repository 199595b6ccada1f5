// Degree-raising embeddings between wire monoids: straight-wire padding,
// doubling, and middle insertion.
#pragma once

#include <stdexcept>
#include <vector>

#include "diagmon/chip.hpp"

namespace diagmon {

// Adds `top` straight wires above and `bottom` below; existing pins shift
// down by `top`.
inline Chip embed_pad(const Chip& xi, int top, int bottom) {
  if (top < 0 || bottom < 0) throw std::invalid_argument("padding must be non-negative");
  const int n = xi.degree();
  const int nn = top + n + bottom;
  std::vector<int> partner(static_cast<std::size_t>(2 * nn));
  const auto lift = [&](int pin) {
    return pin < n ? pin + top : nn + top + (pin - n);
  };
  for (int j = 0; j < top; ++j) {
    partner[static_cast<std::size_t>(j)] = nn + j;
    partner[static_cast<std::size_t>(nn + j)] = j;
  }
  for (int j = top + n; j < nn; ++j) {
    partner[static_cast<std::size_t>(j)] = nn + j;
    partner[static_cast<std::size_t>(nn + j)] = j;
  }
  for (int k = 0; k < 2 * n; ++k)
    partner[static_cast<std::size_t>(lift(k))] = lift(xi.matching.partner(k));
  return Chip{Matching(nn, std::move(partner)), xi.circles};
}

// Two disjoint copies of the chip stacked into one of twice the degree;
// circle counts double.
inline Chip embed_double(const Chip& xi) {
  const int n = xi.degree();
  const int nn = 2 * n;
  std::vector<int> partner(static_cast<std::size_t>(2 * nn));
  for (int copy = 0; copy < 2; ++copy) {
    const int shift = copy * n;
    const auto lift = [&](int pin) {
      return pin < n ? pin + shift : nn + shift + (pin - n);
    };
    for (int k = 0; k < 2 * n; ++k)
      partner[static_cast<std::size_t>(lift(k))] = lift(xi.matching.partner(k));
  }
  return Chip{Matching(nn, std::move(partner)), checked_add(xi.circles, xi.circles)};
}

// Inserts one straight wire exactly in the middle of an even-degree chip.
inline Chip embed_insert_middle(const Chip& xi) {
  const int n = xi.degree();
  if (n % 2 != 0) throw std::invalid_argument("middle insertion needs an even degree");
  const int half = n / 2;
  const int nn = n + 1;
  std::vector<int> partner(static_cast<std::size_t>(2 * nn));
  const auto lift = [&](int pin) {
    if (pin < n) return pin < half ? pin : pin + 1;
    const int j = pin - n;
    return nn + (j < half ? j : j + 1);
  };
  for (int k = 0; k < 2 * n; ++k)
    partner[static_cast<std::size_t>(lift(k))] = lift(xi.matching.partner(k));
  partner[static_cast<std::size_t>(half)] = nn + half;
  partner[static_cast<std::size_t>(nn + half)] = half;
  return Chip{Matching(nn, std::move(partner)), xi.circles};
}

}  // namespace diagmon
