#include <doctest.h>

#include <random>

#include "diagmon/identities.hpp"
#include "diagmon/rees.hpp"
#include "diagmon/words.hpp"

using namespace diagmon;

TEST_CASE("zimin words") {
  CHECK(format_word(zimin(1)) == "x1");
  CHECK(format_word(zimin(2)) == "x1 x2 x1");
  CHECK(format_word(zimin(3)) == "x1 x2 x1 x3 x1 x2 x1");
  for (int n = 1; n <= 10; ++n) {
    const InvWord z = zimin(n);
    CHECK(z.length() == (1ULL << n) - 1);
    CHECK(z.plain());
    for (int i = 1; i <= n; ++i) CHECK(occurrences(z, i) == 1 << (n - i));
    if (n < 10) CHECK(concat(concat(zimin(n), parse_word("x" + std::to_string(n + 1))), zimin(n)) == zimin(n + 1));
  }
  CHECK_THROWS_AS(zimin(0), std::invalid_argument);
  CHECK_THROWS_AS(zimin(23), std::invalid_argument);
}

TEST_CASE("word star reverses and toggles") {
  const InvWord w = parse_word("x1 x2");
  CHECK(format_word(word_star(w)) == "x2* x1*");
  CHECK(word_star(word_star(w)) == w);
  CHECK(format_word(word_star(parse_word("x1*"))) == "x1");
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Letter> ls;
    const int len = 1 + static_cast<int>(rng() % 6);
    for (int p = 0; p < len; ++p) ls.push_back(Letter{1 + static_cast<int>(rng() % 4), rng() % 2 == 0});
    const InvWord v{ls};
    CHECK(word_star(word_star(v)) == v);
  }
}

TEST_CASE("occurrence counting") {
  const InvWord w = parse_word("x1 x1* x2");
  CHECK(occurrences(w, 1) == 2);
  CHECK(starred_occurrences(w, 1) == 1);
  CHECK(occurrences(w, 7) == 0);
  CHECK(occurrences(zimin(4), 1) == 8);
}

TEST_CASE("word and identity literals") {
  CHECK(parse_word("x1x2*x1") == parse_word("x1 x2* x1"));
  CHECK_THROWS_AS(parse_word(""), ParseError);
  CHECK_THROWS_AS(parse_word("y1"), ParseError);
  CHECK_THROWS_AS(parse_word("x"), ParseError);
  const Identity id = parse_identity("x1 x2 = x2 x1");
  CHECK(format_identity(id) == "x1 x2 = x2 x1");
  CHECK_FALSE(id.involutory());
  CHECK(parse_identity("x1* = x1").involutory());
  CHECK_THROWS_AS(parse_identity("x1 x2"), ParseError);
  CHECK_THROWS_AS(parse_identity("x1 = x2 = x3"), ParseError);
  CHECK(id.letter_ids() == std::vector<int>{1, 2});
}

TEST_CASE("evaluation in chip and table contexts") {
  const ChipMonoid k3{3, std::nullopt};
  std::map<int, Chip> assignment = {{1, hook(3, 1)}};
  CHECK(evaluate(parse_word("x1"), assignment, k3) == hook(3, 1));
  CHECK_THROWS_AS(evaluate(parse_word("x2"), assignment, k3), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(parse_word("x1*"), assignment, k3), std::invalid_argument);

  const ChipMonoid k3_star{3, DiagramInvolution::reflection};
  CHECK(evaluate(parse_word("x1*"), assignment, k3_star) == hook(3, 1));
  assignment.insert_or_assign(1, multiply(hook(3, 1), hook(3, 2)));
  CHECK(evaluate(parse_word("x1*"), assignment, k3_star) == multiply(hook(3, 2), hook(3, 1)));

  const FiniteSemigroup b = brandt_b21();
  const TableMonoid tb{&b};
  std::map<int, int> ta = {{1, b.index_of_label("a")}, {2, b.index_of_label("b")}};
  CHECK(evaluate(parse_word("x1 x2 x1"), ta, tb) == b.index_of_label("a"));
  CHECK(evaluate(parse_word("x1 x1"), ta, tb) == b.index_of_label("0"));

  // multiplicative in concatenation, and star evaluates through the involution
  std::mt19937_64 rng(17);
  const ChipMonoid ctx{3, DiagramInvolution::rotation};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Letter> lu, lv;
    for (int p = 0; p < 1 + static_cast<int>(rng() % 3); ++p)
      lu.push_back(Letter{1 + static_cast<int>(rng() % 3), rng() % 3 == 0});
    for (int p = 0; p < 1 + static_cast<int>(rng() % 3); ++p)
      lv.push_back(Letter{1 + static_cast<int>(rng() % 3), rng() % 3 == 0});
    const InvWord u{lu}, v{lv};
    std::map<int, Chip> a = {{1, hook(3, 1)}, {2, hook(3, 2)}, {3, circle(3)}};
    CHECK(evaluate(concat(u, v), a, ctx) == multiply(evaluate(u, a, ctx), evaluate(v, a, ctx)));
    CHECK(evaluate(word_star(u), a, ctx) == rotate(evaluate(u, a, ctx)));
  }
}

TEST_CASE("zimin fingerprints in K_3") {
  CHECK(zimin_fingerprint_k3(3, 3, K3Generator::circle) == circle(3));
  CHECK(zimin_fingerprint_k3(4, 2, K3Generator::circle) == Chip{identity_matching(3), 4});
  CHECK(zimin_fingerprint_k3(3, 2, K3Generator::hook_one) == multiply(circle(3), hook(3, 1)));
  CHECK_THROWS_AS(zimin_fingerprint_k3(3, 4, K3Generator::circle), std::invalid_argument);
  CHECK_THROWS_AS(zimin_fingerprint_k3(21, 1, K3Generator::circle), std::invalid_argument);
  for (int n = 1; n <= 6; ++n)
    for (int i = 1; i <= n; ++i) {
      const std::uint64_t p = 1ULL << (n - i);
      CHECK(zimin_fingerprint_k3(n, i, K3Generator::circle) == Chip{identity_matching(3), p});
      CHECK(zimin_fingerprint_k3(n, i, K3Generator::hook_one) == Chip{forget(hook(3, 1)), p - 1});
    }
}

TEST_CASE("satisfies_identity basics") {
  const FiniteSemigroup b = brandt_b21();
  CHECK(satisfies_identity(b, parse_identity("x1 = x1")));

  FiniteSemigroup trivial;
  trivial.labels = {"1"};
  trivial.table = {0};
  trivial.identity = 0;
  CHECK(satisfies_identity(trivial, parse_identity("x1 x2 = x2 x2 x1")));

  // golden value, frozen from an exhaustive 36-assignment scan: x=1, y=b
  // separates the two sides
  const Identity id = parse_identity("x1 x2 x1 x2 x1 = x1 x2 x1");
  CHECK_FALSE(satisfies_identity(b, id));
  {
    bool holds = true;  // independent scan over the raw table
    for (int x = 0; x < 6 && holds; ++x)
      for (int y = 0; y < 6 && holds; ++y) {
        const int xyx = b.product(b.product(x, y), x);
        if (b.product(b.product(xyx, y), x) != xyx) holds = false;
      }
    CHECK_FALSE(holds);
  }

  FiniteSemigroup plain = b;
  plain.involution.reset();
  CHECK_THROWS_AS(satisfies_identity(plain, parse_identity("x1* = x1")), std::invalid_argument);

  // TSL distinguishes x from x*
  CHECK_FALSE(satisfies_identity(tsl(), parse_identity("x1 = x1*")));
  CHECK(satisfies_identity(tsl(), parse_identity("x1 x1* = x1* x1")));
}

TEST_CASE("refutation over the K_3 generators") {
  const ChipMonoid ctx{3, std::nullopt};
  const std::vector<Chip> gens = kauffman_generators(3);

  const auto w = refute_identity(gens, ctx, parse_identity("x1 x2 = x2 x1"), 1);
  REQUIRE(w.has_value());
  CHECK(w->assignment.at(1) == hook(3, 1));
  CHECK(w->assignment.at(2) == hook(3, 2));
  CHECK(w->words.at(1) == std::vector<int>{1});

  const auto z = refute_identity(gens, ctx, Identity{zimin(2), parse_word("x1 x1 x2")}, 1);
  REQUIRE(z.has_value());
  CHECK(evaluate(zimin(2), z->assignment, ctx) != evaluate(parse_word("x1 x1 x2"), z->assignment, ctx));

  CHECK_FALSE(refute_identity(gens, ctx, parse_identity("x1 = x1"), 3).has_value());

  // pinning both letters turns the search into a ground check
  const std::map<int, Chip> pinned = {{1, hook(3, 1)}, {2, hook(3, 2)}};
  CHECK_FALSE(refute_identity(gens, ctx, parse_identity("x1 x2 x1 = x1"), 1, pinned).has_value());
  const std::map<int, Chip> bad_pin = {{1, hook(3, 1)}, {2, hook(3, 1)}};
  CHECK(refute_identity(gens, ctx, parse_identity("x1 x2 x1 = x1"), 1, bad_pin).has_value());

  // deeper candidates pick up products: x1 x1 = x1 has no depth-0 witness
  // besides the identity, but fails on c at depth 1
  CHECK_FALSE(refute_identity(gens, ctx, parse_identity("x1 x1 = x1"), 0).has_value());
  const auto deep = refute_identity(gens, ctx, parse_identity("x1 x1 = x1"), 1);
  REQUIRE(deep.has_value());
  CHECK(deep->assignment.at(1) == circle(3));
}

TEST_CASE("refutation over finite tables") {
  const FiniteSemigroup t = tsl();
  const TableMonoid ctx{&t};
  // TSL has no identity, so the empty product is not a candidate
  const auto w = refute_identity(std::vector<int>{0, 1, 2}, ctx, parse_identity("x1 = x1*"), 1);
  REQUIRE(w.has_value());
  CHECK(w->assignment.at(1) == 0);  // e, whose star is f
}

TEST_CASE("bounded isoterm search") {
  FiniteSemigroup trivial;
  trivial.labels = {"1"};
  trivial.table = {0};
  trivial.identity = 0;
  const auto witnesses = isoterm_witnesses(trivial, parse_word("x1"), 2);
  bool has_x1x1 = false;
  for (const auto& w : witnesses)
    if (w == parse_word("x1 x1")) has_x1x1 = true;
  CHECK(has_x1x1);

  // x1* is not a witness over TSL since e and f differ
  const auto t_witnesses = isoterm_witnesses(tsl(), parse_word("x1"), 1);
  for (const auto& w : t_witnesses) CHECK(w != parse_word("x1*"));

  // B_2^1: the Zimin word Z_2 survives a shortened bound quickly
  const auto b_witnesses = isoterm_witnesses(brandt_b21(), zimin(2), 4);
  CHECK(b_witnesses.empty());

  // a found witness really satisfies the identity
  const FiniteSemigroup b = brandt_b21();
  const auto found = isoterm_witnesses(b, parse_word("x1 x1"), 3);
  CHECK(!found.empty());
  for (const auto& w : found) CHECK(satisfies_identity(b, Identity{parse_word("x1 x1"), w}));
}

namespace {

// Same candidate space as isoterm_witnesses, but every candidate is decided
// by the public satisfies_identity, with none of the probe-ordering or
// early-exit machinery.
std::vector<InvWord> brute_isoterm(const FiniteSemigroup& sg, const InvWord& v, int max_len) {
  std::vector<int> alphabet = v.letter_ids();
  alphabet.push_back(alphabet.back() + 1);
  std::vector<Letter> symbols;
  for (int id : alphabet) {
    symbols.push_back({id, false});
    if (sg.involution) symbols.push_back({id, true});
  }
  std::vector<InvWord> out;
  std::vector<std::size_t> word(1, 0);
  for (;;) {
    std::vector<Letter> ls;
    for (std::size_t s : word) ls.push_back(symbols[s]);
    const InvWord w{ls};
    if (w != v && satisfies_identity(sg, Identity{v, w})) out.push_back(w);
    std::size_t j = word.size();
    while (j > 0 && word[j - 1] == symbols.size() - 1) word[--j] = 0;
    if (j == 0) {
      if (word.size() == static_cast<std::size_t>(max_len)) break;
      word.assign(word.size() + 1, 0);
    } else {
      ++word[j - 1];
    }
  }
  return out;
}

}  // namespace

TEST_CASE("isoterm search agrees with the brute satisfies_identity route") {
  const FiniteSemigroup b = brandt_b21();
  CHECK(isoterm_witnesses(b, zimin(2), 5) == brute_isoterm(b, zimin(2), 5));
  CHECK(isoterm_witnesses(b, parse_word("x1 x1"), 4) == brute_isoterm(b, parse_word("x1 x1"), 4));
  CHECK(isoterm_witnesses(tsl(), parse_word("x1 x2"), 4) == brute_isoterm(tsl(), parse_word("x1 x2"), 4));
  CHECK(isoterm_witnesses(a2(), parse_word("x1 x2 x1"), 3) == brute_isoterm(a2(), parse_word("x1 x2 x1"), 3));
}

TEST_CASE("cross-check: satisfies vs depth-bounded refutation") {
  std::mt19937_64 rng(23);
  for (const FiniteSemigroup& sg : {brandt_b21(), a2(), tsl()}) {
    const TableMonoid ctx{&sg};
    std::vector<int> everything(static_cast<std::size_t>(sg.size()));
    for (int i = 0; i < sg.size(); ++i) everything[static_cast<std::size_t>(i)] = i;
    const bool stars = sg.involution.has_value();
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Letter> lu, lv;
      for (int p = 0; p < 1 + static_cast<int>(rng() % 3); ++p)
        lu.push_back(Letter{1 + static_cast<int>(rng() % 3), stars && rng() % 4 == 0});
      for (int p = 0; p < 1 + static_cast<int>(rng() % 3); ++p)
        lv.push_back(Letter{1 + static_cast<int>(rng() % 3), stars && rng() % 4 == 0});
      const Identity id{InvWord{lu}, InvWord{lv}};
      CHECK(satisfies_identity(sg, id) == !refute_identity(everything, ctx, id, sg.size()).has_value());
    }
  }
}
