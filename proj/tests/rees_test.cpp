#include <doctest.h>

#include <random>
#include <string>

#include "diagmon/rees.hpp"

using namespace diagmon;

namespace {

// Independent oracle for the Brandt monoid: reduce words over {a, b} with
// the rewriting rules aa -> 0, bb -> 0, aba -> a, bab -> b. The normal forms
// are exactly 1 (empty), a, b, ab, ba and 0.
std::string brandt_reduce(std::string w) {
  if (w.find('Z') != std::string::npos) return "Z";  // the zero absorbs
  for (;;) {
    bool changed = false;
    for (const auto& [from, to] : std::vector<std::pair<std::string, std::string>>{
             {"aa", ""}, {"bb", ""}, {"aba", "a"}, {"bab", "b"}}) {
      const auto pos = w.find(from);
      if (pos != std::string::npos) {
        if (to.empty()) return "Z";  // hit a zero rule
        w = w.substr(0, pos) + to + w.substr(pos + from.size());
        changed = true;
      }
    }
    if (!changed) return w;
  }
}

std::string brandt_word(const std::string& label) { return label == "1" ? "" : label == "0" ? "Z" : label; }

}  // namespace

TEST_CASE("abelian group arithmetic and element orders") {
  const AbelianGroup g{{4, 6}, 1};
  CHECK(g.coords() == 3);
  CHECK_FALSE(g.finite());
  CHECK(g.add({3, 5, 2}, {2, 2, -5}) == AbelianGroup::Element{1, 1, -3});
  CHECK(g.negate({1, 0, 7}) == AbelianGroup::Element{3, 0, -7});
  CHECK(g.element_order({0, 0, 0}) == 1);
  CHECK(g.element_order({2, 0, 0}) == 2);
  CHECK(g.element_order({1, 1, 0}) == 12);
  CHECK_FALSE(g.element_order({0, 0, 1}).has_value());
  CHECK_THROWS_AS(g.size(), std::invalid_argument);

  const AbelianGroup z12{{12}, 0};
  CHECK(z12.size() == 12);
  CHECK(z12.element_order({8}) == 3);
  CHECK(z12.elements().size() == 12);
}

TEST_CASE("rees multiplication rules") {
  const ReesMatrixSemigroup a2s = a2_rees();
  const RMElement x = RMElement::make_triple(0, {}, 1);  // (1,e,2)
  const RMElement y = RMElement::make_triple(1, {}, 0);  // (2,e,1)
  CHECK(a2s.multiply(x, y) == RMElement::make_zero());  // sandwich entry p_{2,2} = 0
  CHECK(a2s.multiply(y, x) == RMElement::make_triple(1, {}, 1));
  CHECK(a2s.multiply(x, RMElement::make_zero()) == RMElement::make_zero());
  CHECK(a2s.multiply(RMElement::make_zero(), x) == RMElement::make_zero());
  CHECK_THROWS_AS(a2s.multiply(x, RMElement::make_one()), std::invalid_argument);
  const ReesMatrixSemigroup with_one = adjoin_identity(a2s);
  CHECK(with_one.multiply(x, RMElement::make_one()) == x);
  CHECK(with_one.multiply(RMElement::make_one(), RMElement::make_one()) == RMElement::make_one());

  // associativity over an infinite group, on random triples
  ReesMatrixSemigroup s;
  s.group = AbelianGroup{{}, 1};
  s.matrix = SandwichMatrix(2, 2);
  s.matrix.at(0, 0) = std::nullopt;
  s.matrix.at(0, 1) = s.group.zero();
  s.matrix.at(1, 0) = AbelianGroup::Element{3};
  s.matrix.at(1, 1) = std::nullopt;
  std::mt19937_64 rng(31);
  const auto rand_elem = [&]() -> RMElement {
    if (rng() % 8 == 0) return RMElement::make_zero();
    return RMElement::make_triple(rng() % 2, AbelianGroup::Element{static_cast<std::int64_t>(rng() % 11) - 5},
                                  rng() % 2);
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const RMElement p = rand_elem(), q = rand_elem(), r = rand_elem();
    CHECK(s.multiply(s.multiply(p, q), r) == s.multiply(p, s.multiply(q, r)));
  }
}

TEST_CASE("A_2 materialization") {
  const FiniteSemigroup a = a2();
  CHECK(a.size() == 5);
  validate(a);
  CHECK(a.zero.has_value());
  CHECK_FALSE(a.identity.has_value());
  CHECK(idempotents(a).size() == 4);  // three idempotent triples plus zero

  const FiniteSemigroup a21 = adjoin_identity(a);
  CHECK(a21.size() == 6);
  validate(a21);
  CHECK(a21.identity == 0);
  CHECK(a21.product(0, 0) == 0);
}

TEST_CASE("brandt monoid matches the rewriting oracle") {
  const FiniteSemigroup b = brandt_b21();
  validate(b);
  for (int x = 0; x < b.size(); ++x)
    for (int y = 0; y < b.size(); ++y) {
      const std::string expected = brandt_reduce(brandt_word(b.label(x)) + brandt_word(b.label(y)));
      const std::string got = brandt_word(b.label(b.product(x, y)));
      CHECK(got == expected);
    }
  CHECK(b.product(b.index_of_label("ab"), b.index_of_label("ab")) == b.index_of_label("ab"));
  CHECK(b.involution_of(b.index_of_label("ab")) == b.index_of_label("ba"));
  CHECK(b.involution_of(b.index_of_label("a")) == b.index_of_label("a"));

  // aba = a through the table
  const int a = b.index_of_label("a"), bb = b.index_of_label("b");
  CHECK(b.product(b.product(a, bb), a) == a);
}

TEST_CASE("twisted semilattice") {
  const FiniteSemigroup t = tsl();
  validate(t);
  CHECK(t.product(0, 0) == 0);
  CHECK(t.product(1, 1) == 1);
  CHECK(t.product(0, 1) == 2);
  CHECK(t.product(1, 0) == 2);
  CHECK(t.involution_of(0) == 1);

  // embeds into B_2^1 on {ab, ba, 0}
  const FiniteSemigroup b = brandt_b21();
  const std::vector<int> img = {b.index_of_label("ab"), b.index_of_label("ba"), b.index_of_label("0")};
  for (int x = 0; x < 3; ++x) {
    CHECK(b.involution_of(img[static_cast<std::size_t>(x)]) == img[static_cast<std::size_t>(t.involution_of(x))]);
    for (int y = 0; y < 3; ++y)
      CHECK(b.product(img[static_cast<std::size_t>(x)], img[static_cast<std::size_t>(y)]) ==
            img[static_cast<std::size_t>(t.product(x, y))]);
  }
}

TEST_CASE("B_2^1 is the adjoined Brandt core over the trivial group") {
  const FiniteSemigroup built = adjoin_identity(materialize(brandt_core_rees()));
  CHECK(built.size() == 6);
  validate(built);
  const auto iso = is_isomorphic(built, brandt_b21());
  CHECK(iso.has_value());
}

TEST_CASE("collapse onto the trivial group") {
  ReesMatrixSemigroup s;
  s.group = AbelianGroup{{4}, 0};
  s.matrix = SandwichMatrix(2, 2);
  s.matrix.at(0, 0) = s.group.zero();
  s.matrix.at(0, 1) = AbelianGroup::Element{3};
  s.matrix.at(1, 0) = s.group.zero();
  s.matrix.at(1, 1) = std::nullopt;
  const ReesMatrixSemigroup t = collapse_to_trivial(s);
  CHECK(t.matrix.at(0, 1).has_value());
  CHECK_FALSE(t.matrix.at(1, 1).has_value());
  for (const RMElement& x : s.elements())
    for (const RMElement& y : s.elements())
      CHECK(collapse_element(s.multiply(x, y)) == t.multiply(collapse_element(x), collapse_element(y)));
  CHECK(collapse_element(RMElement::make_triple(1, {2}, 0)) == RMElement::make_triple(1, {}, 0));
}

TEST_CASE("submatrix classifier") {
  const AbelianGroup z{{}, 1};
  const auto elem = [](std::int64_t v) { return std::optional<AbelianGroup::Element>(AbelianGroup::Element{v}); };

  SandwichMatrix form3(2, 2);
  form3.at(0, 0) = z.zero();
  form3.at(0, 1) = z.zero();
  form3.at(1, 0) = z.zero();
  form3.at(1, 1) = elem(1);
  const auto cert3 = nfb_submatrix_classify(form3, z);
  CHECK(cert3.form == CertificateForm::infinite_order);
  CHECK(cert3.row1 == 0);
  CHECK(cert3.col1 == 0);

  SandwichMatrix form2(2, 2);
  form2.at(0, 0) = std::nullopt;
  form2.at(0, 1) = elem(1);
  form2.at(1, 0) = elem(2);
  form2.at(1, 1) = std::nullopt;
  CHECK(nfb_submatrix_classify(form2, z).form == CertificateForm::two_zeros);

  const AbelianGroup z4{{4}, 0};
  SandwichMatrix none(2, 2);
  none.at(0, 0) = z4.zero();
  none.at(0, 1) = z4.zero();
  none.at(1, 0) = z4.zero();
  none.at(1, 1) = z4.zero();
  CHECK_FALSE(nfb_submatrix_classify(none, z4));

  // finite-order corner is not an infinite-order certificate
  SandwichMatrix finite_corner(2, 2);
  finite_corner.at(0, 0) = z4.zero();
  finite_corner.at(0, 1) = z4.zero();
  finite_corner.at(1, 0) = z4.zero();
  finite_corner.at(1, 1) = AbelianGroup::Element{2};
  CHECK_FALSE(nfb_submatrix_classify(finite_corner, z4));

  // a zero in an off-corner position is found through pair reordering
  SandwichMatrix moved(2, 3);
  moved.at(0, 0) = z4.zero();
  moved.at(0, 1) = std::nullopt;
  moved.at(0, 2) = z4.zero();
  moved.at(1, 0) = z4.zero();
  moved.at(1, 1) = z4.zero();
  moved.at(1, 2) = z4.zero();
  const auto cert = nfb_submatrix_classify(moved, z4);
  CHECK(cert.form == CertificateForm::one_zero);
  CHECK(cert.row2 == 0);  // the zero row comes second in the reported pair
}

TEST_CASE("symmetric-matrix involution") {
  ReesMatrixSemigroup s;
  s.group = AbelianGroup{{6}, 0};
  s.matrix = SandwichMatrix(3, 3);
  std::mt19937_64 rng(77);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = r; c < 3; ++c) {
      std::optional<AbelianGroup::Element> e;
      if (rng() % 4 != 0) e = AbelianGroup::Element{static_cast<std::int64_t>(rng() % 6)};
      s.matrix.at(r, c) = e;
      s.matrix.at(c, r) = e;
    }
  CHECK(s.symmetric_square());
  CHECK(s.involution(RMElement::make_zero()) == RMElement::make_zero());
  const RMElement t = RMElement::make_triple(0, {4}, 2);
  CHECK(s.involution(t) == RMElement::make_triple(2, {4}, 0));
  for (int trial = 0; trial < 1000; ++trial) {
    const auto rand_elem = [&]() {
      return RMElement::make_triple(rng() % 3, AbelianGroup::Element{static_cast<std::int64_t>(rng() % 6)},
                                    rng() % 3);
    };
    const RMElement x = rand_elem(), y = rand_elem();
    CHECK(s.involution(s.multiply(x, y)) == s.multiply(s.involution(y), s.involution(x)));
    CHECK(s.involution(s.involution(x)) == x);
  }

  ReesMatrixSemigroup asym = a2_rees();
  asym.matrix.at(0, 1) = std::nullopt;  // break the symmetry
  CHECK_THROWS_AS(asym.involution(RMElement::make_zero()), std::invalid_argument);
}

TEST_CASE("infinite-order proof objects") {
  ReesMatrixSemigroup s;
  s.group = AbelianGroup{{}, 1};
  s.matrix = SandwichMatrix(2, 2);
  s.matrix.at(0, 0) = s.group.zero();
  s.matrix.at(0, 1) = s.group.zero();
  s.matrix.at(1, 0) = s.group.zero();
  s.matrix.at(1, 1) = AbelianGroup::Element{2};  // d = 2 in Z
  const auto cert = nfb_submatrix_classify(s.matrix, s.group);
  REQUIRE(cert.form == CertificateForm::infinite_order);
  const Form3Core core(s, cert);

  CHECK(core.in_r(RMElement::make_triple(0, {0}, 1)));
  CHECK(core.in_r(RMElement::make_triple(1, {6}, 0)));
  CHECK_FALSE(core.in_r(RMElement::make_triple(1, {3}, 0)));   // odd, not a power of d
  CHECK_FALSE(core.in_r(RMElement::make_triple(1, {-2}, 0)));  // negative exponent
  CHECK_FALSE(core.in_j(RMElement::make_triple(0, {0}, 0)));
  CHECK(core.in_j(RMElement::make_triple(0, {2}, 0)));
  CHECK_FALSE(core.in_r(RMElement::make_zero()));

  CHECK(core.truncate_r(5).size() == 24);  // 4 triples per exponent 0..5
  CHECK(core.truncate_j(5).size() == 20);

  for (const RMElement& x : core.truncate_r(4))
    for (const RMElement& y : core.truncate_r(4)) {
      const RMElement p = s.multiply(x, y);
      CHECK(core.in_r(p));
      if (core.in_j(x) || core.in_j(y)) CHECK(core.in_j(p));
    }

  const FiniteSemigroup q = core.quotient();
  CHECK(q.size() == 5);
  validate(q);
  CHECK(is_isomorphic(q, a2()).has_value());
}

TEST_CASE("group, element and matrix literals") {
  CHECK(parse_group("Z") == AbelianGroup{{}, 1});
  CHECK(parse_group("Z4") == AbelianGroup{{4}, 0});
  CHECK(parse_group("Z2xZ3xZ") == AbelianGroup{{2, 3}, 1});
  CHECK(format_group(AbelianGroup{{2, 3}, 1}) == "Z2xZ3xZ");
  CHECK_THROWS_AS(parse_group("Q"), ParseError);

  const AbelianGroup z = parse_group("Z");
  CHECK(parse_group_element("e", z) == z.zero());
  CHECK(parse_group_element("(0|1)", z) == AbelianGroup::Element{1});
  CHECK(parse_group_element("(|1)", z) == AbelianGroup::Element{1});
  const AbelianGroup mixed = parse_group("Z4xZ");
  CHECK(parse_group_element("(3|-2)", mixed) == AbelianGroup::Element{3, -2});
  CHECK(parse_group_element("(7|0)", mixed) == AbelianGroup::Element{3, 0});
  CHECK_THROWS_AS(parse_group_element("(1,2|0)", z), ParseError);

  const SandwichMatrix m = parse_sandwich_matrix("e,e;e,(0|1)", z);
  CHECK(m.rows == 2);
  CHECK(m.cols == 2);
  CHECK(m.at(0, 0).has_value());
  CHECK(*m.at(1, 1) == AbelianGroup::Element{1});
  CHECK(nfb_submatrix_classify(m, z).form == CertificateForm::infinite_order);
  CHECK(format_sandwich_matrix(m, z) == "e,e;e,(0|1)");

  const SandwichMatrix zeros = parse_sandwich_matrix("0,e;e,0", trivial_group());
  CHECK_FALSE(zeros.at(0, 0).has_value());
  CHECK(nfb_submatrix_classify(zeros, trivial_group()).form == CertificateForm::two_zeros);
  CHECK_THROWS_AS(parse_sandwich_matrix("e,e;e", z), ParseError);
}

TEST_CASE("malformed group and matrix literals only raise ParseError") {
  std::mt19937_64 rng(0xfa22);
  const std::string pool = "Zz0123456789xXe0(),;|-+ ";
  const AbelianGroup mixed = parse_group("Z4xZ");
  for (int trial = 0; trial < 5000; ++trial) {
    std::string text;
    const int len = static_cast<int>(rng() % 20);
    for (int i = 0; i < len; ++i) text += pool[rng() % pool.size()];
    try {
      parse_group(text);
    } catch (const ParseError&) {
    }
    try {
      parse_sandwich_matrix(text, mixed);
    } catch (const ParseError&) {
    }
  }
  CHECK(true);
}
