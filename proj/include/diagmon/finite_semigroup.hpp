// Finite semigroups as explicit Cayley tables, with optional involution,
// identity and zero. Houses closure from generators, ideals, Rees quotients
// and a small isomorphism search.
#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace diagmon {

struct FiniteSemigroup {
  std::vector<std::string> labels;       // size k, purely cosmetic
  std::vector<int> table;                // row-major k*k
  std::optional<std::vector<int>> involution;
  std::optional<int> identity;
  std::optional<int> zero;

  int size() const { return static_cast<int>(labels.size()); }

  int product(int a, int b) const {
    return table[static_cast<std::size_t>(a) * labels.size() + static_cast<std::size_t>(b)];
  }
  int& at(int a, int b) {
    return table[static_cast<std::size_t>(a) * labels.size() + static_cast<std::size_t>(b)];
  }
  int involution_of(int a) const {
    if (!involution) throw std::logic_error("semigroup has no involution");
    return (*involution)[static_cast<std::size_t>(a)];
  }

  const std::string& label(int a) const { return labels[static_cast<std::size_t>(a)]; }

  int index_of_label(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
      if (labels[static_cast<std::size_t>(i)] == name) return i;
    throw std::invalid_argument("no element labelled '" + name + "'");
  }
};

// Exhaustive axiom check: associativity, involution laws, identity/zero laws.
// Cubic in the size, meant for the small tables this library builds.
inline void validate(const FiniteSemigroup& sg) {
  const int k = sg.size();
  if (sg.table.size() != static_cast<std::size_t>(k) * static_cast<std::size_t>(k))
    throw std::invalid_argument("table size does not match element count");
  for (int v : sg.table)
    if (v < 0 || v >= k) throw std::invalid_argument("table entry out of range");
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        if (sg.product(sg.product(a, b), c) != sg.product(a, sg.product(b, c)))
          throw std::invalid_argument("table is not associative at (" + std::to_string(a) + "," +
                                      std::to_string(b) + "," + std::to_string(c) + ")");
  if (sg.involution) {
    const auto& inv = *sg.involution;
    if (inv.size() != static_cast<std::size_t>(k)) throw std::invalid_argument("involution table has wrong size");
    for (int a = 0; a < k; ++a) {
      const int ia = inv[static_cast<std::size_t>(a)];
      if (ia < 0 || ia >= k) throw std::invalid_argument("involution entry out of range");
      if (inv[static_cast<std::size_t>(ia)] != a)
        throw std::invalid_argument("involution is not self-inverse at " + std::to_string(a));
    }
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        if (inv[static_cast<std::size_t>(sg.product(a, b))] !=
            sg.product(inv[static_cast<std::size_t>(b)], inv[static_cast<std::size_t>(a)]))
          throw std::invalid_argument("involution is not an anti-automorphism at (" + std::to_string(a) +
                                      "," + std::to_string(b) + ")");
  }
  if (sg.identity) {
    const int e = *sg.identity;
    for (int a = 0; a < k; ++a)
      if (sg.product(e, a) != a || sg.product(a, e) != a)
        throw std::invalid_argument("marked identity is not neutral");
  }
  if (sg.zero) {
    const int z = *sg.zero;
    for (int a = 0; a < k; ++a)
      if (sg.product(z, a) != z || sg.product(a, z) != z)
        throw std::invalid_argument("marked zero is not absorbing");
  }
}

inline std::vector<int> idempotents(const FiniteSemigroup& sg) {
  std::vector<int> out;
  for (int a = 0; a < sg.size(); ++a)
    if (sg.product(a, a) == a) out.push_back(a);
  return out;
}

struct IdealSpec {
  std::vector<int> members;  // sorted, unique

  bool contains(int x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }
};

inline bool is_ideal(const FiniteSemigroup& sg, const IdealSpec& ideal) {
  if (ideal.members.empty()) return false;
  for (int x : ideal.members)
    for (int s = 0; s < sg.size(); ++s)
      if (!ideal.contains(sg.product(s, x)) || !ideal.contains(sg.product(x, s))) return false;
  return true;
}

// Smallest two-sided ideal containing the seed.
inline IdealSpec ideal_generated(const FiniteSemigroup& sg, const std::vector<int>& seed) {
  std::vector<char> in(static_cast<std::size_t>(sg.size()), 0);
  std::deque<int> queue;
  for (int x : seed) {
    if (x < 0 || x >= sg.size()) throw std::invalid_argument("seed index out of range");
    if (!in[static_cast<std::size_t>(x)]) {
      in[static_cast<std::size_t>(x)] = 1;
      queue.push_back(x);
    }
  }
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int s = 0; s < sg.size(); ++s) {
      for (int y : {sg.product(s, x), sg.product(x, s)}) {
        if (!in[static_cast<std::size_t>(y)]) {
          in[static_cast<std::size_t>(y)] = 1;
          queue.push_back(y);
        }
      }
    }
  }
  IdealSpec out;
  for (int x = 0; x < sg.size(); ++x)
    if (in[static_cast<std::size_t>(x)]) out.members.push_back(x);
  return out;
}

struct ReesQuotientResult {
  FiniteSemigroup semigroup;
  std::vector<int> image;  // old index -> quotient index
};

// Collapse an ideal to a single zero. The involution descends when the ideal
// is closed under it; asking otherwise is an error.
inline ReesQuotientResult rees_quotient(const FiniteSemigroup& sg, const IdealSpec& ideal) {
  if (!is_ideal(sg, ideal)) throw std::invalid_argument("member set is not an ideal");
  const int k = sg.size();
  std::vector<int> image(static_cast<std::size_t>(k), -1);
  FiniteSemigroup q;
  for (int x = 0; x < k; ++x) {
    if (ideal.contains(x)) continue;
    image[static_cast<std::size_t>(x)] = q.size();
    q.labels.push_back(sg.label(x));
  }
  const int zero_index = q.size();
  q.labels.push_back("0");
  for (int x = 0; x < k; ++x)
    if (image[static_cast<std::size_t>(x)] == -1) image[static_cast<std::size_t>(x)] = zero_index;

  const int qk = q.size();
  q.table.assign(static_cast<std::size_t>(qk) * static_cast<std::size_t>(qk), zero_index);
  for (int x = 0; x < k; ++x) {
    if (ideal.contains(x)) continue;
    for (int y = 0; y < k; ++y) {
      if (ideal.contains(y)) continue;
      q.at(image[static_cast<std::size_t>(x)], image[static_cast<std::size_t>(y)]) =
          image[static_cast<std::size_t>(sg.product(x, y))];
    }
  }
  q.zero = zero_index;
  if (sg.identity && !ideal.contains(*sg.identity))
    q.identity = image[static_cast<std::size_t>(*sg.identity)];
  if (sg.involution) {
    for (int x : ideal.members)
      if (!ideal.contains(sg.involution_of(x)))
        throw std::invalid_argument("ideal is not closed under the involution");
    std::vector<int> inv(static_cast<std::size_t>(qk));
    inv[static_cast<std::size_t>(zero_index)] = zero_index;
    for (int x = 0; x < k; ++x)
      if (!ideal.contains(x))
        inv[static_cast<std::size_t>(image[static_cast<std::size_t>(x)])] =
            image[static_cast<std::size_t>(sg.involution_of(x))];
    q.involution = std::move(inv);
  }
  return ReesQuotientResult{std::move(q), std::move(image)};
}

// New identity is prepended at index 0; every old index shifts by one.
inline FiniteSemigroup adjoin_identity(const FiniteSemigroup& sg) {
  const int k = sg.size();
  FiniteSemigroup out;
  out.labels.reserve(static_cast<std::size_t>(k) + 1);
  out.labels.push_back("1");
  for (const auto& l : sg.labels) out.labels.push_back(l);
  const int kk = k + 1;
  out.table.assign(static_cast<std::size_t>(kk) * static_cast<std::size_t>(kk), 0);
  for (int a = 0; a < kk; ++a) {
    out.at(0, a) = a;
    out.at(a, 0) = a;
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      out.at(a + 1, b + 1) = sg.product(a, b) + 1;
  out.identity = 0;
  if (sg.zero) out.zero = *sg.zero + 1;
  if (sg.involution) {
    std::vector<int> inv(static_cast<std::size_t>(kk));
    inv[0] = 0;
    for (int a = 0; a < k; ++a) inv[static_cast<std::size_t>(a + 1)] = sg.involution_of(a) + 1;
    out.involution = std::move(inv);
  }
  return out;
}

namespace detail {

// Greedy generating set plus a derivation for every element: either a
// generator or a product of two earlier elements.
struct GeneratingData {
  std::vector<int> generators;
  // derivation[x]: {-1, g} means x is the g-th generator; {a, b} means
  // x = a * b with a, b discovered earlier.
  std::vector<std::pair<int, int>> derivation;
  std::vector<int> order;  // discovery order of all elements
};

inline GeneratingData generating_data(const FiniteSemigroup& sg) {
  const int k = sg.size();
  GeneratingData data;
  data.derivation.assign(static_cast<std::size_t>(k), {-2, -2});
  std::vector<char> known(static_cast<std::size_t>(k), 0);

  const auto close = [&]() {
    bool grew = true;
    while (grew) {
      grew = false;
      for (int a = 0; a < k; ++a) {
        if (!known[static_cast<std::size_t>(a)]) continue;
        for (int b = 0; b < k; ++b) {
          if (!known[static_cast<std::size_t>(b)]) continue;
          const int p = sg.product(a, b);
          if (!known[static_cast<std::size_t>(p)]) {
            known[static_cast<std::size_t>(p)] = 1;
            data.derivation[static_cast<std::size_t>(p)] = {a, b};
            data.order.push_back(p);
            grew = true;
          }
        }
      }
    }
  };

  for (int x = 0; x < k; ++x) {
    if (known[static_cast<std::size_t>(x)]) continue;
    data.derivation[static_cast<std::size_t>(x)] = {-1, static_cast<int>(data.generators.size())};
    data.generators.push_back(x);
    known[static_cast<std::size_t>(x)] = 1;
    data.order.push_back(x);
    close();
  }
  return data;
}

}  // namespace detail

// Searches for a bijection preserving the table, the involutions when both
// sides carry one, and the marked identity/zero. Backtracks over images of a
// generating set; intended for the tiny semigroups in this library.
inline std::optional<std::vector<int>> is_isomorphic(const FiniteSemigroup& s, const FiniteSemigroup& t) {
  const int k = s.size();
  if (k != t.size()) return std::nullopt;
  const bool use_involution = s.involution.has_value() && t.involution.has_value();
  if (idempotents(s).size() != idempotents(t).size()) return std::nullopt;
  if (s.identity.has_value() != t.identity.has_value()) return std::nullopt;
  if (s.zero.has_value() != t.zero.has_value()) return std::nullopt;

  const detail::GeneratingData gen = detail::generating_data(s);
  const int g = static_cast<int>(gen.generators.size());

  std::vector<int> gen_image(static_cast<std::size_t>(g), -1);
  std::vector<int> map(static_cast<std::size_t>(k), -1);
  std::vector<char> used(static_cast<std::size_t>(k), 0);

  // Extends generator images along derivations; checks full preservation.
  const auto extend_and_check = [&]() -> bool {
    std::fill(map.begin(), map.end(), -1);
    for (int x : gen.order) {
      const auto [a, b] = gen.derivation[static_cast<std::size_t>(x)];
      map[static_cast<std::size_t>(x)] =
          a == -1 ? gen_image[static_cast<std::size_t>(b)]
                  : t.product(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]);
    }
    std::vector<char> hit(static_cast<std::size_t>(k), 0);
    for (int x = 0; x < k; ++x) {
      const int m = map[static_cast<std::size_t>(x)];
      if (m < 0 || hit[static_cast<std::size_t>(m)]) return false;
      hit[static_cast<std::size_t>(m)] = 1;
    }
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        if (map[static_cast<std::size_t>(s.product(a, b))] !=
            t.product(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]))
          return false;
    if (use_involution)
      for (int a = 0; a < k; ++a)
        if (map[static_cast<std::size_t>(s.involution_of(a))] !=
            t.involution_of(map[static_cast<std::size_t>(a)]))
          return false;
    if (s.identity && map[static_cast<std::size_t>(*s.identity)] != *t.identity) return false;
    if (s.zero && map[static_cast<std::size_t>(*s.zero)] != *t.zero) return false;
    return true;
  };

  const std::function<bool(int)> place = [&](int gi) -> bool {
    if (gi == g) return extend_and_check();
    const int sx = gen.generators[static_cast<std::size_t>(gi)];
    for (int ty = 0; ty < k; ++ty) {
      if (used[static_cast<std::size_t>(ty)]) continue;
      // cheap local invariants
      if ((s.product(sx, sx) == sx) != (t.product(ty, ty) == ty)) continue;
      if (s.identity && ((*s.identity == sx) != (*t.identity == ty))) continue;
      if (s.zero && ((*s.zero == sx) != (*t.zero == ty))) continue;
      if (use_involution && ((s.involution_of(sx) == sx) != (t.involution_of(ty) == ty))) continue;
      used[static_cast<std::size_t>(ty)] = 1;
      gen_image[static_cast<std::size_t>(gi)] = ty;
      if (place(gi + 1)) return true;
      used[static_cast<std::size_t>(ty)] = 0;
    }
    return false;
  };

  if (!place(0)) return std::nullopt;
  return map;
}

class ClosureLimitError : public std::runtime_error {
 public:
  explicit ClosureLimitError(std::size_t limit)
      : std::runtime_error("closure exceeded the element limit " + std::to_string(limit) +
                           "; the generated monoid may be infinite") {}
};

template <typename Elem>
struct ClosureResult {
  std::vector<Elem> elements;
  FiniteSemigroup semigroup;
};

template <typename Elem>
struct ClosureOptions {
  std::optional<Elem> identity;                        // included as element 0 when present
  std::function<Elem(const Elem&)> involution;         // extends generators by their images
  std::function<std::string(const Elem&)> label;       // defaults to positional labels
  std::size_t limit = 100000;
};

// Breadth-first orbit of the generators under right multiplication; the
// resulting element set is product-closed, so the full Cayley table can be
// filled afterwards. Throws ClosureLimitError when the orbit outgrows the
// limit, the deterministic signal that the generated monoid may be infinite.
template <typename Elem, typename Mul, typename Hash = std::hash<Elem>,
          typename Eq = std::equal_to<Elem>>
ClosureResult<Elem> closure(const std::vector<Elem>& generators, Mul&& mul,
                            const ClosureOptions<Elem>& opts = {}) {
  std::vector<Elem> gens = generators;
  if (opts.involution)
    for (const Elem& gen : generators) gens.push_back(opts.involution(gen));

  std::vector<Elem> elements;
  std::unordered_map<Elem, int, Hash, Eq> index;
  const auto add = [&](const Elem& e) -> int {
    const auto it = index.find(e);
    if (it != index.end()) return it->second;
    if (elements.size() >= opts.limit) throw ClosureLimitError(opts.limit);
    const int id = static_cast<int>(elements.size());
    elements.push_back(e);
    index.emplace(e, id);
    return id;
  };

  if (opts.identity) add(*opts.identity);
  for (const Elem& gen : gens) add(gen);

  for (std::size_t next = 0; next < elements.size(); ++next) {
    for (const Elem& gen : gens) {
      const Elem prod = mul(elements[next], gen);
      add(prod);
    }
  }

  const int k = static_cast<int>(elements.size());
  FiniteSemigroup sg;
  sg.labels.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    sg.labels.push_back(opts.label ? opts.label(elements[static_cast<std::size_t>(i)])
                                   : "e" + std::to_string(i));
  sg.table.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      const Elem prod = mul(elements[static_cast<std::size_t>(a)], elements[static_cast<std::size_t>(b)]);
      const auto it = index.find(prod);
      if (it == index.end()) throw std::logic_error("closure orbit is not product-closed");
      sg.at(a, b) = it->second;
    }
  }
  if (opts.identity) sg.identity = index.at(*opts.identity);
  if (opts.involution) {
    std::vector<int> inv(static_cast<std::size_t>(k));
    for (int a = 0; a < k; ++a) {
      const Elem img = opts.involution(elements[static_cast<std::size_t>(a)]);
      const auto it = index.find(img);
      if (it == index.end()) throw std::logic_error("orbit is not closed under the involution");
      inv[static_cast<std::size_t>(a)] = it->second;
    }
    sg.involution = std::move(inv);
  }
  for (int z = 0; z < k; ++z) {
    bool absorbing = true;
    for (int a = 0; a < k && absorbing; ++a)
      absorbing = sg.product(z, a) == z && sg.product(a, z) == z;
    if (absorbing) {
      sg.zero = z;
      break;
    }
  }
  return ClosureResult<Elem>{std::move(elements), std::move(sg)};
}

// Plain-text table format: first line the element count, then the k rows of
// the table, then optional "inv:", "one:", "zero:" lines.
inline void write_semigroup(std::ostream& os, const FiniteSemigroup& sg) {
  const int k = sg.size();
  os << k << '\n';
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (b) os << ' ';
      os << sg.product(a, b);
    }
    os << '\n';
  }
  if (sg.involution) {
    os << "inv:";
    for (int v : *sg.involution) os << ' ' << v;
    os << '\n';
  }
  if (sg.identity) os << "one: " << *sg.identity << '\n';
  if (sg.zero) os << "zero: " << *sg.zero << '\n';
}

inline FiniteSemigroup read_semigroup(std::istream& is) {
  FiniteSemigroup sg;
  int k = 0;
  if (!(is >> k) || k < 1) throw std::invalid_argument("expected a positive element count");
  sg.labels.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) sg.labels.push_back(std::to_string(i));
  sg.table.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      int v;
      if (!(is >> v)) throw std::invalid_argument("table row is incomplete");
      if (v < 0 || v >= k) throw std::invalid_argument("table entry out of range");
      sg.at(a, b) = v;
    }
  std::string key;
  while (is >> key) {
    if (key == "inv:") {
      std::vector<int> inv(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i)
        if (!(is >> inv[static_cast<std::size_t>(i)]))
          throw std::invalid_argument("involution line is incomplete");
      sg.involution = std::move(inv);
    } else if (key == "one:") {
      int v;
      if (!(is >> v)) throw std::invalid_argument("missing identity index");
      sg.identity = v;
    } else if (key == "zero:") {
      int v;
      if (!(is >> v)) throw std::invalid_argument("missing zero index");
      sg.zero = v;
    } else {
      throw std::invalid_argument("unrecognized directive '" + key + "'");
    }
  }
  validate(sg);
  return sg;
}

}  // namespace diagmon
