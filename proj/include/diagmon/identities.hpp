// Evaluation of (involutory) words in monoids, exhaustive identity checking
// over finite tables, depth-bounded refutation over generated monoids, and
// bounded isoterm search.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "diagmon/chip.hpp"
#include "diagmon/chip_literal.hpp"
#include "diagmon/finite_semigroup.hpp"
#include "diagmon/kauffman.hpp"
#include "diagmon/words.hpp"

namespace diagmon {

// Evaluation context over chips of a fixed degree with an optional diagram
// involution.
struct ChipMonoid {
  using element_type = Chip;
  using hash_type = ChipHash;

  int degree = 2;
  std::optional<DiagramInvolution> involution;

  Chip mul(const Chip& a, const Chip& b) const { return multiply(a, b); }
  bool has_involution() const { return involution.has_value(); }
  Chip inv(const Chip& a) const {
    if (!involution) throw std::invalid_argument("no involution selected for this chip context");
    return *involution == DiagramInvolution::reflection ? star(a) : rotate(a);
  }
  bool has_identity() const { return true; }
  Chip one() const { return identity_chip(degree); }
  bool eq(const Chip& a, const Chip& b) const { return a == b; }
  std::string format(const Chip& a) const { return format_chip(a); }
};

// Evaluation context over an explicit Cayley table; elements are indices.
struct TableMonoid {
  using element_type = int;
  using hash_type = std::hash<int>;

  const FiniteSemigroup* sg = nullptr;

  int mul(int a, int b) const { return sg->product(a, b); }
  bool has_involution() const { return sg->involution.has_value(); }
  int inv(int a) const { return sg->involution_of(a); }
  bool has_identity() const { return sg->identity.has_value(); }
  int one() const {
    if (!sg->identity) throw std::invalid_argument("semigroup has no identity element");
    return *sg->identity;
  }
  bool eq(int a, int b) const { return a == b; }
  std::string format(int a) const { return sg->label(a); }
};

// Left-to-right product of the letter images; starred letters pass through
// the context involution.
template <typename Ctx>
typename Ctx::element_type evaluate(const InvWord& w,
                                    const std::map<int, typename Ctx::element_type>& assignment,
                                    const Ctx& ctx) {
  std::optional<typename Ctx::element_type> acc;
  for (const Letter& l : w.letters) {
    const auto it = assignment.find(l.id);
    if (it == assignment.end())
      throw std::invalid_argument("letter x" + std::to_string(l.id) + " has no assigned value");
    if (l.starred && !ctx.has_involution())
      throw std::invalid_argument("word uses a starred letter but the context has no involution");
    const typename Ctx::element_type img = l.starred ? ctx.inv(it->second) : it->second;
    acc = acc ? ctx.mul(*acc, img) : img;
  }
  return *acc;
}

// True iff both sides evaluate equally under every assignment of the
// identity's letters into the semigroup.
inline bool satisfies_identity(const FiniteSemigroup& sg, const Identity& id) {
  if (id.involutory() && !sg.involution)
    throw std::invalid_argument("involutory identity over a semigroup without involution");
  const std::vector<int> letters = id.letter_ids();
  const std::size_t m = letters.size();
  const int k = sg.size();
  const TableMonoid ctx{&sg};

  std::vector<int> tuple(m, 0);
  std::map<int, int> assignment;
  for (;;) {
    for (std::size_t j = 0; j < m; ++j) assignment[letters[j]] = tuple[j];
    if (evaluate(id.lhs, assignment, ctx) != evaluate(id.rhs, assignment, ctx)) return false;
    std::size_t j = m;
    while (j > 0 && tuple[j - 1] == k - 1) tuple[--j] = 0;
    if (j == 0) break;
    ++tuple[j - 1];
  }
  return true;
}

template <typename Ctx>
struct RefutationWitness {
  std::map<int, typename Ctx::element_type> assignment;
  // Generator words (as generator indices) for the searched letters; pinned
  // letters are absent here.
  std::map<int, std::vector<int>> words;
};

// Candidate elements are products of at most `depth` generators, deduplicated
// and ordered by their minimal generator word (length first, then
// lexicographic); the empty product is included when the context has an
// identity. Returns the lexicographically first refuting assignment.
template <typename Ctx>
std::optional<RefutationWitness<Ctx>> refute_identity(
    const std::vector<typename Ctx::element_type>& generators, const Ctx& ctx, const Identity& id,
    int depth, const std::map<int, typename Ctx::element_type>& pinned = {}) {
  using Elem = typename Ctx::element_type;
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  if (id.involutory() && !ctx.has_involution())
    throw std::invalid_argument("involutory identity over a context without involution");

  std::vector<Elem> candidates;
  std::vector<std::vector<int>> words;
  std::unordered_map<Elem, int, typename Ctx::hash_type> seen;
  const auto add = [&](const Elem& e, std::vector<int> word) {
    if (seen.count(e)) return;
    seen.emplace(e, static_cast<int>(candidates.size()));
    candidates.push_back(e);
    words.push_back(std::move(word));
  };
  if (ctx.has_identity()) add(ctx.one(), {});
  std::size_t level_begin = 0;
  std::size_t level_end = candidates.size();
  for (int len = 1; len <= depth; ++len) {
    if (len == 1) {
      for (std::size_t g = 0; g < generators.size(); ++g)
        add(generators[g], {static_cast<int>(g)});
    } else {
      for (std::size_t p = level_begin; p < level_end; ++p) {
        if (words[p].size() != static_cast<std::size_t>(len - 1)) continue;
        for (std::size_t g = 0; g < generators.size(); ++g) {
          std::vector<int> word = words[p];
          word.push_back(static_cast<int>(g));
          add(ctx.mul(candidates[p], generators[g]), std::move(word));
        }
      }
    }
    level_begin = level_end;
    level_end = candidates.size();
  }

  std::vector<int> free_letters;
  for (int l : id.letter_ids())
    if (!pinned.count(l)) free_letters.push_back(l);
  const std::size_t m = free_letters.size();
  if (candidates.empty() && m > 0) return std::nullopt;

  std::vector<std::size_t> tuple(m, 0);
  std::map<int, Elem> assignment = pinned;
  for (;;) {
    for (std::size_t j = 0; j < m; ++j)
      assignment.insert_or_assign(free_letters[j], candidates[tuple[j]]);
    if (!ctx.eq(evaluate(id.lhs, assignment, ctx), evaluate(id.rhs, assignment, ctx))) {
      RefutationWitness<Ctx> w;
      w.assignment = assignment;
      for (std::size_t j = 0; j < m; ++j) w.words[free_letters[j]] = words[tuple[j]];
      return w;
    }
    if (m == 0) break;
    std::size_t j = m;
    while (j > 0 && tuple[j - 1] == candidates.size() - 1) tuple[--j] = 0;
    if (j == 0) break;
    ++tuple[j - 1];
  }
  return std::nullopt;
}

// All words v' != v over the letters of v plus one fresh letter, of length at
// most max_len, such that the semigroup satisfies v = v'. Starred symbols are
// searched only when the semigroup has an involution. An empty result means v
// passed the bounded isoterm test.
inline std::vector<InvWord> isoterm_witnesses(const FiniteSemigroup& sg, const InvWord& v, int max_len) {
  if (!v.plain() && !sg.involution)
    throw std::invalid_argument("involutory base word over a semigroup without involution");
  if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");

  std::vector<int> alphabet = v.letter_ids();
  alphabet.push_back(alphabet.back() + 1);  // one fresh letter
  const std::size_t a_count = alphabet.size();
  const int k = sg.size();
  const bool stars = sg.involution.has_value();

  // symbols in candidate order: letters ascending, unstarred before starred
  std::vector<Letter> symbols;
  for (int id : alphabet) {
    symbols.push_back(Letter{id, false});
    if (stars) symbols.push_back(Letter{id, true});
  }

  // Every assignment of the alphabet, as tuples over element indices.
  std::size_t assignment_count = 1;
  for (std::size_t j = 0; j < a_count; ++j) assignment_count *= static_cast<std::size_t>(k);
  std::vector<std::vector<int>> assignments;
  assignments.reserve(assignment_count);
  {
    std::vector<int> tuple(a_count, 0);
    for (;;) {
      assignments.push_back(tuple);
      std::size_t j = a_count;
      while (j > 0 && tuple[j - 1] == k - 1) tuple[--j] = 0;
      if (j == 0) break;
      ++tuple[j - 1];
    }
  }

  const TableMonoid ctx{&sg};
  const auto eval_with = [&](const InvWord& w, const std::vector<int>& tuple) {
    std::map<int, int> assignment;
    for (std::size_t j = 0; j < a_count; ++j) assignment[alphabet[j]] = tuple[j];
    return evaluate(w, assignment, ctx);
  };

  std::vector<int> v_value(assignments.size());
  for (std::size_t t = 0; t < assignments.size(); ++t) v_value[t] = eval_with(v, assignments[t]);

  // Probe order: assignments with a non-zero value of v first; in a semigroup
  // with a rich zero structure those kill almost every candidate immediately.
  std::vector<std::size_t> probe_order(assignments.size());
  for (std::size_t t = 0; t < assignments.size(); ++t) probe_order[t] = t;
  if (sg.zero) {
    std::stable_sort(probe_order.begin(), probe_order.end(), [&](std::size_t x, std::size_t y) {
      return (v_value[x] != *sg.zero) > (v_value[y] != *sg.zero);
    });
  }

  // image[t][s]: value of symbol s under assignment t (involution applied)
  std::vector<std::vector<int>> image(assignments.size(), std::vector<int>(symbols.size()));
  for (std::size_t t = 0; t < assignments.size(); ++t)
    for (std::size_t s = 0; s < symbols.size(); ++s) {
      const auto it = std::find(alphabet.begin(), alphabet.end(), symbols[s].id);
      const int base = assignments[t][static_cast<std::size_t>(it - alphabet.begin())];
      image[t][s] = symbols[s].starred ? sg.involution_of(base) : base;
    }

  std::vector<InvWord> witnesses;
  std::vector<std::size_t> word(1, 0);
  const auto current_word = [&]() {
    std::vector<Letter> ls;
    ls.reserve(word.size());
    for (std::size_t s : word) ls.push_back(symbols[s]);
    return InvWord(std::move(ls));
  };

  for (;;) {
    bool all_match = true;
    for (std::size_t t : probe_order) {
      int acc = image[t][word[0]];
      bool dead = false;
      for (std::size_t p = 1; p < word.size(); ++p) {
        acc = sg.product(acc, image[t][word[p]]);
        if (sg.zero && acc == *sg.zero && v_value[t] != *sg.zero) {
          dead = true;  // zero is absorbing, the tail cannot recover
          break;
        }
      }
      if (dead || acc != v_value[t]) {
        all_match = false;
        break;
      }
    }
    if (all_match) {
      InvWord w = current_word();
      if (w != v) witnesses.push_back(std::move(w));
    }
    // odometer over symbol indices; exhausted lengths grow the word
    std::size_t j = word.size();
    while (j > 0 && word[j - 1] == symbols.size() - 1) word[--j] = 0;
    if (j == 0) {
      if (word.size() == static_cast<std::size_t>(max_len)) break;
      word.assign(word.size() + 1, 0);
    } else {
      ++word[j - 1];
    }
  }
  return witnesses;
}

enum class K3Generator { circle, hook_one };

// Evaluates the n-th Zimin word in K_3 under x_i -> c (or h_1) and x_j -> 1
// for every other letter.
inline Chip zimin_fingerprint_k3(int n, int i, K3Generator which) {
  if (n < 1 || i < 1 || i > n) throw std::invalid_argument("need 1 <= i <= n");
  if (n > 20) throw std::invalid_argument("fingerprint bound exceeded: circle counts double per level up to n=20");
  const InvWord z = zimin(n);
  const ChipMonoid ctx{3, std::nullopt};
  std::map<int, Chip> assignment;
  for (int j = 1; j <= n; ++j) assignment.emplace(j, identity_chip(3));
  assignment.insert_or_assign(i, which == K3Generator::circle ? circle(3) : hook(3, 1));
  return evaluate(z, assignment, ctx);
}

}  // namespace diagmon
