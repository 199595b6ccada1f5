// Brauer-monoid arithmetic (multiply, then discard circles) and exhaustive
// enumeration of matchings, plain and planar.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "diagmon/chip.hpp"

namespace diagmon {

inline Matching brauer_multiply(const Matching& a, const Matching& b) {
  return forget(multiply(Chip{a, 0}, Chip{b, 0}));
}

inline bool brauer_idempotent(const Matching& m) {
  return brauer_multiply(m, m) == m;
}

// Circle count produced when an idempotent matching is squared in the wire
// monoid; the whole fiber over the idempotent multiplies by adding it.
inline std::uint64_t fiber_increment(const Matching& m) {
  const Chip sq = multiply(Chip{m, 0}, Chip{m, 0});
  if (sq.matching != m) throw std::invalid_argument("matching is not idempotent");
  return sq.circles;
}

namespace detail {

inline std::optional<int> env_bound(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  return std::atoi(raw);
}

template <typename F>
void visit_matchings(std::vector<int>& partner, int pins, F&& visit) {
  int first = 0;
  while (first < pins && partner[static_cast<std::size_t>(first)] != -1) ++first;
  if (first == pins) {
    visit(partner);
    return;
  }
  for (int q = first + 1; q < pins; ++q) {
    if (partner[static_cast<std::size_t>(q)] != -1) continue;
    partner[static_cast<std::size_t>(first)] = q;
    partner[static_cast<std::size_t>(q)] = first;
    visit_matchings(partner, pins, visit);
    partner[static_cast<std::size_t>(first)] = -1;
    partner[static_cast<std::size_t>(q)] = -1;
  }
}

}  // namespace detail

// Visits every perfect matching on 2n pins, in lexicographic order of the
// partner array. No size bound; callers control the cost.
template <typename F>
void for_each_matching(int n, F&& visit) {
  if (n < 1) throw std::invalid_argument("degree must be >= 1");
  std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
  detail::visit_matchings(partner, 2 * n, [&](const std::vector<int>& p) { visit(Matching(n, p)); });
}

// All (2n-1)!! matchings of degree n. Bounded because the count explodes;
// override with DIAGMON_BRAUER_BOUND or the explicit argument.
inline std::vector<Matching> enumerate_brauer(int n, std::optional<int> bound_override = std::nullopt) {
  const int bound = bound_override ? *bound_override
                                   : detail::env_bound("DIAGMON_BRAUER_BOUND").value_or(7);
  if (n > bound)
    throw std::invalid_argument("degree " + std::to_string(n) + " exceeds the Brauer enumeration bound " + std::to_string(bound));
  std::vector<Matching> out;
  for_each_matching(n, [&](Matching m) { out.push_back(std::move(m)); });
  return out;
}

namespace detail {

// Non-crossing chord diagrams on 2n boundary positions correspond to
// balanced bracket sequences; every opener matches its stack partner.
template <typename F>
void visit_dyck(int pins, int t, int opens_used, std::vector<int>& open_stack,
                std::vector<int>& chord, F&& emit) {
  if (t == pins) {
    emit(chord);
    return;
  }
  if (2 * opens_used < pins) {
    open_stack.push_back(t);
    visit_dyck(pins, t + 1, opens_used + 1, open_stack, chord, emit);
    open_stack.pop_back();
  }
  if (!open_stack.empty()) {
    const int a = open_stack.back();
    open_stack.pop_back();
    chord[static_cast<std::size_t>(a)] = t;
    chord[static_cast<std::size_t>(t)] = a;
    visit_dyck(pins, t + 1, opens_used, open_stack, chord, emit);
    open_stack.push_back(a);
  }
}

}  // namespace detail

// All planar matchings of degree n (Catalan(n) of them), in lexicographic
// order of the partner array. Bound overridable via DIAGMON_JONES_BOUND.
inline std::vector<Matching> enumerate_jones(int n, std::optional<int> bound_override = std::nullopt) {
  const int bound = bound_override ? *bound_override
                                   : detail::env_bound("DIAGMON_JONES_BOUND").value_or(10);
  if (n > bound)
    throw std::invalid_argument("degree " + std::to_string(n) + " exceeds the Jones enumeration bound " + std::to_string(bound));
  if (n < 1) throw std::invalid_argument("degree must be >= 1");

  std::vector<Matching> out;
  std::vector<int> chord(static_cast<std::size_t>(2 * n), -1);
  std::vector<int> open_stack;
  detail::visit_dyck(2 * n, 0, 0, open_stack, chord, [&](const std::vector<int>& c) {
    std::vector<int> partner(static_cast<std::size_t>(2 * n));
    for (int k = 0; k < 2 * n; ++k) {
      const int pos = boundary_position(n, k);
      const int q = c[static_cast<std::size_t>(pos)];
      partner[static_cast<std::size_t>(k)] = q < n ? q : 3 * n - 1 - q;
    }
    out.emplace_back(n, std::move(partner));
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace diagmon
