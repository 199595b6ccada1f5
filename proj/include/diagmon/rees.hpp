// Rees matrix semigroups M0(I,G,Lambda;P) over abelian groups, the named
// small (involution) semigroups A_2, B_2^1 and TSL, the collapse onto the
// trivial group, and the 2x2 submatrix classifier.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "diagmon/finite_semigroup.hpp"
#include "diagmon/parse_util.hpp"

namespace diagmon {

// Z_{k_1} x ... x Z_{k_m} x Z^r with componentwise addition. Elements are
// coordinate vectors, residues first.
struct AbelianGroup {
  std::vector<std::int64_t> cyclic_orders;  // each >= 1
  int free_rank = 0;

  using Element = std::vector<std::int64_t>;

  std::size_t coords() const { return cyclic_orders.size() + static_cast<std::size_t>(free_rank); }
  bool finite() const { return free_rank == 0; }

  void check(const Element& a) const {
    if (a.size() != coords()) throw std::invalid_argument("group element has the wrong number of coordinates");
  }

  Element reduce(Element a) const {
    check(a);
    for (std::size_t j = 0; j < cyclic_orders.size(); ++j) {
      const std::int64_t k = cyclic_orders[j];
      if (k < 1) throw std::invalid_argument("cyclic order must be >= 1");
      a[j] %= k;
      if (a[j] < 0) a[j] += k;
    }
    return a;
  }

  Element zero() const { return Element(coords(), 0); }

  Element add(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element out(coords());
    for (std::size_t j = 0; j < coords(); ++j) out[j] = a[j] + b[j];
    return reduce(std::move(out));
  }

  Element negate(const Element& a) const {
    check(a);
    Element out(coords());
    for (std::size_t j = 0; j < coords(); ++j) out[j] = -a[j];
    return reduce(std::move(out));
  }

  Element scale(std::int64_t n, const Element& a) const {
    check(a);
    Element out(coords());
    for (std::size_t j = 0; j < coords(); ++j) out[j] = n * a[j];
    return reduce(std::move(out));
  }

  bool is_zero(const Element& a) const {
    check(a);
    return std::all_of(a.begin(), a.end(), [](std::int64_t v) { return v == 0; });
  }

  // Order of the element; nullopt when infinite (some free coordinate nonzero).
  std::optional<std::uint64_t> element_order(const Element& raw) const {
    const Element a = reduce(raw);
    for (std::size_t j = cyclic_orders.size(); j < coords(); ++j)
      if (a[j] != 0) return std::nullopt;
    std::uint64_t order = 1;
    for (std::size_t j = 0; j < cyclic_orders.size(); ++j) {
      const std::uint64_t k = static_cast<std::uint64_t>(cyclic_orders[j]);
      const std::uint64_t g = std::gcd(k, static_cast<std::uint64_t>(a[j]));
      order = std::lcm(order, k / g);
    }
    return order;
  }

  std::uint64_t size() const {
    if (!finite()) throw std::invalid_argument("group is infinite");
    std::uint64_t s = 1;
    for (std::int64_t k : cyclic_orders) s *= static_cast<std::uint64_t>(k);
    return s;
  }

  std::vector<Element> elements() const {
    const std::uint64_t s = size();
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(s));
    Element cur = zero();
    for (;;) {
      out.push_back(cur);
      std::size_t j = cyclic_orders.size();
      while (j > 0 && cur[j - 1] == cyclic_orders[j - 1] - 1) cur[--j] = 0;
      if (j == 0) break;
      ++cur[j - 1];
    }
    return out;
  }

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.cyclic_orders == b.cyclic_orders && a.free_rank == b.free_rank;
  }
};

inline AbelianGroup trivial_group() { return AbelianGroup{{}, 0}; }

// Lambda x I matrix over G united with a zero symbol (stored as nullopt).
struct SandwichMatrix {
  std::size_t rows = 0;  // indexed by Lambda
  std::size_t cols = 0;  // indexed by I
  std::vector<std::optional<AbelianGroup::Element>> entries;

  SandwichMatrix() = default;
  SandwichMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {
    if (r == 0 || c == 0) throw std::invalid_argument("sandwich matrix needs at least one row and column");
  }

  const std::optional<AbelianGroup::Element>& at(std::size_t row, std::size_t col) const {
    return entries[row * cols + col];
  }
  std::optional<AbelianGroup::Element>& at(std::size_t row, std::size_t col) {
    return entries[row * cols + col];
  }
};

// Either the zero, a triple (i, g, lambda), or the adjoined identity.
struct RMElement {
  enum class Kind { zero, triple, one };
  Kind kind = Kind::zero;
  std::size_t i = 0;       // column index into P
  std::size_t lambda = 0;  // row index into P
  AbelianGroup::Element g;

  static RMElement make_zero() { return RMElement{}; }
  static RMElement make_one() {
    RMElement e;
    e.kind = Kind::one;
    return e;
  }
  static RMElement make_triple(std::size_t i, AbelianGroup::Element g, std::size_t lambda) {
    RMElement e;
    e.kind = Kind::triple;
    e.i = i;
    e.lambda = lambda;
    e.g = std::move(g);
    return e;
  }

  friend bool operator==(const RMElement& a, const RMElement& b) {
    if (a.kind != b.kind) return false;
    if (a.kind != Kind::triple) return true;
    return a.i == b.i && a.lambda == b.lambda && a.g == b.g;
  }
  friend bool operator!=(const RMElement& a, const RMElement& b) { return !(a == b); }
};

struct ReesMatrixSemigroup {
  AbelianGroup group;
  SandwichMatrix matrix;
  bool has_identity = false;  // true after adjoin_identity

  std::size_t i_size() const { return matrix.cols; }
  std::size_t lambda_size() const { return matrix.rows; }

  void check_element(const RMElement& a) const {
    if (a.kind == RMElement::Kind::one && !has_identity)
      throw std::invalid_argument("semigroup has no adjoined identity");
    if (a.kind == RMElement::Kind::triple) {
      if (a.i >= i_size() || a.lambda >= lambda_size())
        throw std::invalid_argument("triple index out of range");
      group.check(a.g);
    }
  }

  // (i,g,lambda)(j,h,mu) = (i, g p_{lambda j} h, mu), or zero when the
  // sandwich entry is zero; the zero absorbs and the adjoined one is neutral.
  RMElement multiply(const RMElement& a, const RMElement& b) const {
    check_element(a);
    check_element(b);
    if (a.kind == RMElement::Kind::one) return b;
    if (b.kind == RMElement::Kind::one) return a;
    if (a.kind == RMElement::Kind::zero || b.kind == RMElement::Kind::zero) return RMElement::make_zero();
    const auto& p = matrix.at(a.lambda, b.i);
    if (!p) return RMElement::make_zero();
    return RMElement::make_triple(a.i, group.add(group.add(a.g, *p), b.g), b.lambda);
  }

  bool symmetric_square() const {
    if (matrix.rows != matrix.cols) return false;
    for (std::size_t r = 0; r < matrix.rows; ++r)
      for (std::size_t c = 0; c < matrix.cols; ++c) {
        const auto& x = matrix.at(r, c);
        const auto& y = matrix.at(c, r);
        if (x.has_value() != y.has_value()) return false;
        if (x && group.reduce(*x) != group.reduce(*y)) return false;
      }
    return true;
  }

  // 0* = 0, 1* = 1, (i,g,j)* = (j,g,i); needs I = Lambda and symmetric P.
  RMElement involution(const RMElement& a) const {
    if (!symmetric_square())
      throw std::invalid_argument("involution needs I = Lambda and a symmetric sandwich matrix");
    check_element(a);
    if (a.kind != RMElement::Kind::triple) return a;
    return RMElement::make_triple(a.lambda, a.g, a.i);
  }

  // All elements: the adjoined identity if present, then triples in
  // (i, g, lambda) order, then zero. Finite groups only.
  std::vector<RMElement> elements() const {
    if (!group.finite()) throw std::invalid_argument("cannot enumerate a Rees matrix semigroup over an infinite group");
    std::vector<RMElement> out;
    if (has_identity) out.push_back(RMElement::make_one());
    const std::vector<AbelianGroup::Element> gs = group.elements();
    for (std::size_t i = 0; i < i_size(); ++i)
      for (const auto& g : gs)
        for (std::size_t l = 0; l < lambda_size(); ++l)
          out.push_back(RMElement::make_triple(i, g, l));
    out.push_back(RMElement::make_zero());
    return out;
  }
};

inline ReesMatrixSemigroup adjoin_identity(ReesMatrixSemigroup s) {
  s.has_identity = true;
  return s;
}

inline std::string format_group_element(const AbelianGroup& group, const AbelianGroup::Element& raw) {
  const AbelianGroup::Element a = group.reduce(raw);
  if (group.is_zero(a)) return "e";
  std::string out = "(";
  if (group.cyclic_orders.empty()) {
    out += "0";
  } else {
    for (std::size_t j = 0; j < group.cyclic_orders.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(a[j]);
    }
  }
  out += '|';
  if (group.free_rank == 0) {
    out += "0";
  } else {
    for (int j = 0; j < group.free_rank; ++j) {
      if (j) out += ',';
      out += std::to_string(a[group.cyclic_orders.size() + static_cast<std::size_t>(j)]);
    }
  }
  out += ')';
  return out;
}

inline std::string format_rm_element(const ReesMatrixSemigroup& s, const RMElement& a) {
  switch (a.kind) {
    case RMElement::Kind::zero: return "0";
    case RMElement::Kind::one: return "1";
    case RMElement::Kind::triple:
      return "(" + std::to_string(a.i + 1) + "," + format_group_element(s.group, a.g) + "," +
             std::to_string(a.lambda + 1) + ")";
  }
  return "?";
}

// Explicit Cayley table of a Rees matrix semigroup over a finite group. The
// involution table is included when the matrix is square and symmetric.
inline FiniteSemigroup materialize(const ReesMatrixSemigroup& s) {
  const std::vector<RMElement> elems = s.elements();
  const auto index_of = [&](const RMElement& e) {
    for (std::size_t j = 0; j < elems.size(); ++j)
      if (elems[j] == e) return static_cast<int>(j);
    throw std::logic_error("product escaped the element list");
  };
  const int k = static_cast<int>(elems.size());
  FiniteSemigroup sg;
  sg.labels.reserve(static_cast<std::size_t>(k));
  for (const RMElement& e : elems) sg.labels.push_back(format_rm_element(s, e));
  sg.table.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      sg.at(a, b) = index_of(s.multiply(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)]));
  for (std::size_t j = 0; j < elems.size(); ++j) {
    if (elems[j].kind == RMElement::Kind::zero) sg.zero = static_cast<int>(j);
    if (elems[j].kind == RMElement::Kind::one) sg.identity = static_cast<int>(j);
  }
  if (s.symmetric_square()) {
    std::vector<int> inv(static_cast<std::size_t>(k));
    for (int a = 0; a < k; ++a) inv[static_cast<std::size_t>(a)] = index_of(s.involution(elems[static_cast<std::size_t>(a)]));
    sg.involution = std::move(inv);
  }
  return sg;
}

// A_2: the Rees matrix semigroup over the trivial group with sandwich matrix
// ((e,e),(e,0)), five elements.
inline ReesMatrixSemigroup a2_rees() {
  ReesMatrixSemigroup s;
  s.group = trivial_group();
  s.matrix = SandwichMatrix(2, 2);
  s.matrix.at(0, 0) = s.group.zero();
  s.matrix.at(0, 1) = s.group.zero();
  s.matrix.at(1, 0) = s.group.zero();
  s.matrix.at(1, 1) = std::nullopt;
  return s;
}

inline FiniteSemigroup a2() {
  FiniteSemigroup sg = materialize(a2_rees());
  sg.involution.reset();  // A_2 is used as a plain semigroup
  return sg;
}

// The Brandt core over the trivial group: sandwich matrix ((0,e),(e,0)).
inline ReesMatrixSemigroup brandt_core_rees() {
  ReesMatrixSemigroup s;
  s.group = trivial_group();
  s.matrix = SandwichMatrix(2, 2);
  s.matrix.at(0, 0) = std::nullopt;
  s.matrix.at(0, 1) = s.group.zero();
  s.matrix.at(1, 0) = s.group.zero();
  s.matrix.at(1, 1) = std::nullopt;
  return s;
}

// The six-element Brandt monoid on {1, a, b, ab, ba, 0} with a^2 = b^2 = 0,
// aba = a, bab = b. The involution fixes 1, a, b, 0 and swaps the idempotents
// ab and ba.
inline FiniteSemigroup brandt_b21() {
  FiniteSemigroup sg;
  sg.labels = {"1", "a", "b", "ab", "ba", "0"};
  const int I = 0, A = 1, B = 2, AB = 3, BA = 4, Z = 5;
  sg.table.assign(36, Z);
  const auto set_row = [&](int x, std::initializer_list<int> row) {
    int b = 0;
    for (int v : row) sg.at(x, b++) = v;
  };
  set_row(I, {I, A, B, AB, BA, Z});
  set_row(A, {A, Z, AB, Z, A, Z});
  set_row(B, {B, BA, Z, B, Z, Z});
  set_row(AB, {AB, A, Z, AB, Z, Z});
  set_row(BA, {BA, Z, B, Z, BA, Z});
  set_row(Z, {Z, Z, Z, Z, Z, Z});
  sg.involution = std::vector<int>{I, A, B, BA, AB, Z};
  sg.identity = I;
  sg.zero = Z;
  return sg;
}

// The twisted semilattice: e and f idempotent, all mixed products zero, and
// the involution swaps e and f.
inline FiniteSemigroup tsl() {
  FiniteSemigroup sg;
  sg.labels = {"e", "f", "0"};
  sg.table = {0, 2, 2,
              2, 1, 2,
              2, 2, 2};
  sg.involution = std::vector<int>{1, 0, 2};
  sg.zero = 2;
  return sg;
}

// The collapse onto the trivial group: every nonzero sandwich entry becomes e
// and every triple forgets its group coordinate.
inline ReesMatrixSemigroup collapse_to_trivial(const ReesMatrixSemigroup& s) {
  ReesMatrixSemigroup t;
  t.group = trivial_group();
  t.matrix = SandwichMatrix(s.matrix.rows, s.matrix.cols);
  for (std::size_t r = 0; r < s.matrix.rows; ++r)
    for (std::size_t c = 0; c < s.matrix.cols; ++c)
      t.matrix.at(r, c) = s.matrix.at(r, c) ? std::optional<AbelianGroup::Element>(t.group.zero())
                                            : std::nullopt;
  t.has_identity = s.has_identity;
  return t;
}

inline RMElement collapse_element(const RMElement& a) {
  if (a.kind != RMElement::Kind::triple) return a;
  return RMElement::make_triple(a.i, {}, a.lambda);
}

// The three 2x2 witness shapes: one zero entry in the corner, two zeros on
// the antidiagonal, or three identity entries with an infinite-order fourth.
enum class CertificateForm { none, one_zero, two_zeros, infinite_order };

struct SubmatrixCertificate {
  CertificateForm form = CertificateForm::none;
  std::size_t row1 = 0, row2 = 0, col1 = 0, col2 = 0;

  explicit operator bool() const { return form != CertificateForm::none; }
};

inline std::string certificate_form_name(CertificateForm form) {
  switch (form) {
    case CertificateForm::one_zero: return "one-zero corner (a b / c 0)";
    case CertificateForm::two_zeros: return "antidiagonal zeros (0 b / c 0)";
    case CertificateForm::infinite_order: return "infinite-order corner (e e / e d)";
    case CertificateForm::none: break;
  }
  return "no certificate";
}

// Scans ordered row pairs then ordered column pairs and reports the first
// 2x2 submatrix matching one of the three witness shapes.
inline SubmatrixCertificate nfb_submatrix_classify(const SandwichMatrix& p, const AbelianGroup& group) {
  for (std::size_t r1 = 0; r1 < p.rows; ++r1)
    for (std::size_t r2 = 0; r2 < p.rows; ++r2) {
      if (r2 == r1) continue;
      for (std::size_t c1 = 0; c1 < p.cols; ++c1)
        for (std::size_t c2 = 0; c2 < p.cols; ++c2) {
          if (c2 == c1) continue;
          const auto& a = p.at(r1, c1);
          const auto& b = p.at(r1, c2);
          const auto& c = p.at(r2, c1);
          const auto& d = p.at(r2, c2);
          CertificateForm form = CertificateForm::none;
          if (a && b && c && !d) {
            form = CertificateForm::one_zero;
          } else if (!a && b && c && !d) {
            form = CertificateForm::two_zeros;
          } else if (a && b && c && d && group.is_zero(group.reduce(*a)) &&
                     group.is_zero(group.reduce(*b)) && group.is_zero(group.reduce(*c)) &&
                     !group.element_order(*d).has_value()) {
            form = CertificateForm::infinite_order;
          }
          if (form != CertificateForm::none)
            return SubmatrixCertificate{form, r1, r2, c1, c2};
        }
    }
  return SubmatrixCertificate{};
}

// Proof-scale objects attached to an infinite-order certificate: within the
// 2x2 corner, R collects the triples whose group part is a non-negative power
// of d, and J those with a positive power. Both are exposed as membership
// predicates plus truncated listings; the Rees quotient R/J is a fixed
// five-element table.
class Form3Core {
 public:
  Form3Core(const ReesMatrixSemigroup& s, const SubmatrixCertificate& cert)
      : semigroup_(s), cert_(cert), d_(s.group.reduce(*s.matrix.at(cert.row2, cert.col2))) {
    if (cert.form != CertificateForm::infinite_order)
      throw std::invalid_argument("certificate is not of the infinite-order form");
  }

  // The exponent n >= 0 with g = d^n, if there is one.
  std::optional<std::int64_t> power_of_d(const AbelianGroup::Element& raw) const {
    const AbelianGroup& group = semigroup_.group;
    const AbelianGroup::Element g = group.reduce(raw);
    // d has infinite order, so some free coordinate is nonzero; it pins n.
    const std::size_t fixed = group.cyclic_orders.size();
    std::size_t pivot = fixed;
    while (pivot < group.coords() && d_[pivot] == 0) ++pivot;
    if (pivot == group.coords()) throw std::logic_error("certificate element has finite order");
    if (g[pivot] % d_[pivot] != 0) return std::nullopt;
    const std::int64_t n = g[pivot] / d_[pivot];
    if (n < 0) return std::nullopt;
    if (group.reduce(group.scale(n, d_)) != g) return std::nullopt;
    return n;
  }

  bool in_r(const RMElement& a) const {
    if (a.kind != RMElement::Kind::triple) return false;
    if (!in_corner(a)) return false;
    return power_of_d(a.g).has_value();
  }

  bool in_j(const RMElement& a) const {
    if (!in_r(a)) return false;
    return *power_of_d(a.g) >= 1;
  }

  std::vector<RMElement> truncate_r(std::int64_t max_exponent) const { return truncate(0, max_exponent); }
  std::vector<RMElement> truncate_j(std::int64_t max_exponent) const { return truncate(1, max_exponent); }

  // R with J collapsed to zero: the four exponent-zero triples plus 0.
  FiniteSemigroup quotient() const {
    const std::vector<RMElement> reps = truncate_r(0);
    const int k = static_cast<int>(reps.size()) + 1;
    const int zero = k - 1;
    FiniteSemigroup sg;
    for (const RMElement& e : reps) sg.labels.push_back(format_rm_element(semigroup_, e));
    sg.labels.push_back("0");
    sg.table.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), zero);
    for (int x = 0; x < k - 1; ++x)
      for (int y = 0; y < k - 1; ++y) {
        const RMElement prod = semigroup_.multiply(reps[static_cast<std::size_t>(x)], reps[static_cast<std::size_t>(y)]);
        if (prod.kind == RMElement::Kind::zero || in_j(prod)) continue;  // stays zero
        const auto it = std::find(reps.begin(), reps.end(), prod);
        if (it == reps.end()) throw std::logic_error("product left R, which contradicts closure");
        sg.at(x, y) = static_cast<int>(it - reps.begin());
      }
    sg.zero = zero;
    return sg;
  }

 private:
  bool in_corner(const RMElement& a) const {
    return (a.i == cert_.col1 || a.i == cert_.col2) && (a.lambda == cert_.row1 || a.lambda == cert_.row2);
  }

  std::vector<RMElement> truncate(std::int64_t min_exponent, std::int64_t max_exponent) const {
    std::vector<RMElement> out;
    for (std::int64_t n = min_exponent; n <= max_exponent; ++n) {
      const AbelianGroup::Element g = semigroup_.group.reduce(semigroup_.group.scale(n, d_));
      for (std::size_t i : {cert_.col1, cert_.col2})
        for (std::size_t l : {cert_.row1, cert_.row2})
          out.push_back(RMElement::make_triple(i, g, l));
    }
    return out;
  }

  ReesMatrixSemigroup semigroup_;
  SubmatrixCertificate cert_;
  AbelianGroup::Element d_;
};

// ---- literals ----------------------------------------------------------

// GROUP := factor ("x" factor)*; factor := "Z" (a free factor) | "Z"<k>.
inline AbelianGroup parse_group(std::string_view text) {
  detail::Cursor cur(text);
  AbelianGroup g;
  do {
    if (!cur.accept('Z') && !cur.accept('z'))
      throw ParseError("expected a factor 'Z' or 'Z<k>'", cur.column());
    cur.skip_ws();
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      const std::size_t col = cur.column();
      const std::uint64_t k = cur.integer();
      if (k < 1 || k > 1000000) throw ParseError("cyclic order out of range", col);
      g.cyclic_orders.push_back(static_cast<std::int64_t>(k));
    } else {
      ++g.free_rank;
    }
  } while (cur.accept('x') || cur.accept('X') || cur.accept('*'));
  if (!cur.done()) throw ParseError("trailing input after group", cur.column());
  return g;
}

inline std::string format_group(const AbelianGroup& g) {
  std::string out;
  for (std::int64_t k : g.cyclic_orders) {
    if (!out.empty()) out += 'x';
    out += 'Z';
    out += std::to_string(k);
  }
  for (int j = 0; j < g.free_rank; ++j) {
    if (!out.empty()) out += 'x';
    out += 'Z';
  }
  return out.empty() ? "Z1" : out;
}

namespace detail {

// Coordinate list for one side of an element literal. A single `0` is also
// accepted for an empty side, as in `(0|1)` over Z.
inline std::vector<std::int64_t> parse_coords(Cursor& cur, std::size_t expected, char terminator) {
  std::vector<std::int64_t> out;
  if (cur.peek() != terminator) {
    do {
      out.push_back(cur.signed_integer());
    } while (cur.accept(','));
  }
  if (expected == 0 && out.size() == 1 && out[0] == 0) out.clear();
  if (out.size() != expected)
    throw ParseError("expected " + std::to_string(expected) + " coordinates", cur.column());
  return out;
}

}  // namespace detail

// element := "e" | "(" residues "|" frees ")"; a side with no coordinates may
// be written empty or as a single 0.
inline AbelianGroup::Element parse_group_element(detail::Cursor& cur, const AbelianGroup& g) {
  if (cur.accept('e') || cur.accept('E')) return g.zero();
  cur.expect('(');
  std::vector<std::int64_t> coords = detail::parse_coords(cur, g.cyclic_orders.size(), '|');
  cur.expect('|');
  const std::vector<std::int64_t> frees =
      detail::parse_coords(cur, static_cast<std::size_t>(g.free_rank), ')');
  cur.expect(')');
  coords.insert(coords.end(), frees.begin(), frees.end());
  return g.reduce(std::move(coords));
}

inline AbelianGroup::Element parse_group_element(std::string_view text, const AbelianGroup& g) {
  detail::Cursor cur(text);
  AbelianGroup::Element e = parse_group_element(cur, g);
  if (!cur.done()) throw ParseError("trailing input after group element", cur.column());
  return e;
}

// MATRIX := row (";" row)*; row := entry ("," entry)*; entry := "0" | element.
inline SandwichMatrix parse_sandwich_matrix(std::string_view text, const AbelianGroup& g) {
  detail::Cursor cur(text);
  std::vector<std::vector<std::optional<AbelianGroup::Element>>> rows;
  do {
    std::vector<std::optional<AbelianGroup::Element>> row;
    do {
      if (cur.peek() == '0') {
        cur.expect('0');
        row.push_back(std::nullopt);
      } else {
        row.push_back(parse_group_element(cur, g));
      }
    } while (cur.accept(','));
    rows.push_back(std::move(row));
  } while (cur.accept(';'));
  if (!cur.done()) throw ParseError("trailing input after matrix", cur.column());
  for (const auto& row : rows)
    if (row.size() != rows.front().size())
      throw ParseError("matrix rows have unequal lengths", cur.column());
  SandwichMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
  return m;
}

inline std::string format_sandwich_matrix(const SandwichMatrix& m, const AbelianGroup& g) {
  std::string out;
  for (std::size_t r = 0; r < m.rows; ++r) {
    if (r) out += ';';
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (c) out += ',';
      out += m.at(r, c) ? format_group_element(g, *m.at(r, c)) : "0";
    }
  }
  return out;
}

}  // namespace diagmon
