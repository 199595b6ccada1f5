// Kauffman-monoid specifics: the ideal generated by the circle, the
// six-element quotient of K_3 by that ideal, and finite Jones monoids as
// explicit tables.
#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "diagmon/brauer.hpp"
#include "diagmon/chip.hpp"
#include "diagmon/chip_literal.hpp"
#include "diagmon/finite_semigroup.hpp"

namespace diagmon {

// Membership in the ideal generated by the circle: a planar chip (pi;d)
// factors as (pi;0)*c^d, and circles never vanish under multiplication, so
// the ideal is exactly the planar chips with at least one circle.
inline bool kauffman_ideal_c_member(const Chip& xi) {
  if (!is_planar(xi)) throw std::invalid_argument("chip is not planar, hence not a Kauffman-monoid element");
  return xi.circles >= 1;
}

struct K3Quotient {
  FiniteSemigroup semigroup;           // involution = reflection-induced
  std::vector<Chip> representatives;   // circle-free representatives; last slot is the collapsed ideal
  std::vector<int> rotation_action;    // rotation-induced involution on the quotient
};

// K_3 with the circle ideal collapsed: representatives 1, h1, h2, h1h2, h2h1
// and a zero. Products are computed on chips and collapsed through
// kauffman_ideal_c_member, so no infinite object is ever materialized.
inline K3Quotient k3_quotient() {
  const Chip one = identity_chip(3);
  const Chip h1 = hook(3, 1);
  const Chip h2 = hook(3, 2);
  const std::vector<Chip> reps = {one, h1, h2, multiply(h1, h2), multiply(h2, h1)};
  const std::vector<std::string> names = {"1", "h1", "h2", "h1h2", "h2h1"};

  const int k = static_cast<int>(reps.size()) + 1;
  const int zero = k - 1;
  const auto index_of = [&](const Chip& c) {
    if (kauffman_ideal_c_member(c)) return zero;
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (reps[i] == c) return static_cast<int>(i);
    throw std::logic_error("circle-free product escaped the representative set");
  };

  FiniteSemigroup sg;
  sg.labels = names;
  sg.labels.push_back("0");
  sg.table.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), zero);
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b)
      sg.at(static_cast<int>(a), static_cast<int>(b)) = index_of(multiply(reps[a], reps[b]));
  sg.identity = 0;
  sg.zero = zero;

  std::vector<int> star_action(static_cast<std::size_t>(k), zero);
  std::vector<int> rotate_action(static_cast<std::size_t>(k), zero);
  for (std::size_t a = 0; a < reps.size(); ++a) {
    star_action[a] = index_of(star(reps[a]));
    rotate_action[a] = index_of(rotate(reps[a]));
  }
  sg.involution = star_action;

  K3Quotient out;
  out.semigroup = std::move(sg);
  out.representatives = reps;
  out.representatives.push_back(circle(3));  // a representative of the collapsed class
  out.rotation_action = std::move(rotate_action);
  return out;
}

// Generators of K_n in its chip realization: the circle first, then the hooks.
inline std::vector<Chip> kauffman_generators(int n) {
  std::vector<Chip> gens;
  gens.push_back(circle(n));
  for (int i = 1; i <= n - 1; ++i) gens.push_back(hook(n, i));
  return gens;
}

enum class DiagramInvolution { reflection, rotation };

// The Jones monoid J_n as an explicit table over all planar matchings,
// carrying the chosen involution.
inline FiniteSemigroup jones_monoid(int n, DiagramInvolution inv = DiagramInvolution::reflection) {
  const std::vector<Matching> elems = enumerate_jones(n);
  const auto index_of = [&](const Matching& m) {
    const auto it = std::lower_bound(elems.begin(), elems.end(), m);
    if (it == elems.end() || !(*it == m)) throw std::logic_error("product left the planar matchings");
    return static_cast<int>(it - elems.begin());
  };

  const int k = static_cast<int>(elems.size());
  FiniteSemigroup sg;
  sg.labels.reserve(static_cast<std::size_t>(k));
  for (const Matching& m : elems) sg.labels.push_back(format_matching(m));
  sg.table.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      sg.at(a, b) = index_of(brauer_multiply(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)]));
  std::vector<int> invtab(static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a) {
    const Matching& m = elems[static_cast<std::size_t>(a)];
    invtab[static_cast<std::size_t>(a)] = index_of(inv == DiagramInvolution::reflection ? star(m) : rotate(m));
  }
  sg.involution = std::move(invtab);
  sg.identity = index_of(identity_matching(n));
  return sg;
}

}  // namespace diagmon
