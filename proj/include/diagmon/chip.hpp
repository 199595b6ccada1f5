// Exact arithmetic for wire-monoid elements: perfect matchings on the 2n
// pins of a rectangular chip, plus a free-floating circle count.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace diagmon {

// Pin encoding: left pin i (1-based) lives at index i-1, right pin i' at
// index n+i-1. All public structures use these indices.
inline int left_pin(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("left pin " + std::to_string(i) + " out of range 1.." + std::to_string(n));
  return i - 1;
}

inline int right_pin(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("right pin " + std::to_string(i) + "' out of range 1.." + std::to_string(n));
  return n + i - 1;
}

inline bool pin_is_right(int n, int pin) { return pin >= n; }

// 1-based pin number regardless of side.
inline int pin_number(int n, int pin) { return pin < n ? pin + 1 : pin - n + 1; }

enum class WireKind { l_wire, r_wire, t_wire };

// A fixed-point-free involution on the 2n pins. Blocks of size two are the
// wires of a diagram; the partner array is the canonical representation.
class Matching {
 public:
  Matching(int degree, std::vector<int> partner)
      : degree_(degree), partner_(std::move(partner)) {
    if (degree_ < 1) throw std::invalid_argument("matching degree must be >= 1");
    const int pins = 2 * degree_;
    if (static_cast<int>(partner_.size()) != pins)
      throw std::invalid_argument("partner array must have 2n entries");
    for (int k = 0; k < pins; ++k) {
      const int p = partner_[k];
      if (p < 0 || p >= pins)
        throw std::invalid_argument("partner index out of range at pin " + std::to_string(k));
      if (p == k)
        throw std::invalid_argument("pin " + std::to_string(k) + " is matched to itself");
      if (partner_[p] != k)
        throw std::invalid_argument("partner array is not an involution at pin " + std::to_string(k));
    }
  }

  static Matching from_blocks(int degree, const std::vector<std::pair<int, int>>& blocks) {
    if (degree < 1) throw std::invalid_argument("matching degree must be >= 1");
    const int pins = 2 * degree;
    std::vector<int> partner(static_cast<std::size_t>(pins), -1);
    for (const auto& [a, b] : blocks) {
      if (a < 0 || a >= pins || b < 0 || b >= pins)
        throw std::invalid_argument("block pin out of range");
      if (a == b) throw std::invalid_argument("block joins a pin to itself");
      if (partner[a] != -1 || partner[b] != -1)
        throw std::invalid_argument("pin " + std::to_string(partner[a] != -1 ? a : b) + " appears in more than one block");
      partner[a] = b;
      partner[b] = a;
    }
    for (int k = 0; k < pins; ++k)
      if (partner[k] == -1)
        throw std::invalid_argument("pin " + std::to_string(k) + " is not covered by any block");
    return Matching(degree, std::move(partner));
  }

  int degree() const { return degree_; }
  int partner(int pin) const { return partner_.at(static_cast<std::size_t>(pin)); }
  const std::vector<int>& partners() const { return partner_; }

  // Blocks as {lesser pin, partner} pairs sorted by display order
  // (pin number first, primed side second).
  std::vector<std::pair<int, int>> blocks() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(degree_));
    const auto key = [this](int pin) { return 2 * (pin_number(degree_, pin) - 1) + (pin_is_right(degree_, pin) ? 1 : 0); };
    for (int k = 0; k < 2 * degree_; ++k) {
      const int p = partner_[static_cast<std::size_t>(k)];
      if (key(k) < key(p)) out.emplace_back(k, p);
    }
    std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return key(x.first) < key(y.first); });
    return out;
  }

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.degree_ == b.degree_ && a.partner_ == b.partner_;
  }
  friend bool operator!=(const Matching& a, const Matching& b) { return !(a == b); }
  friend bool operator<(const Matching& a, const Matching& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return a.partner_ < b.partner_;
  }

 private:
  int degree_;
  std::vector<int> partner_;
};

WireKind wire_kind(const Matching& m, const std::pair<int, int>& block);

// One element of the wire monoid: a matching together with the number of
// circles floating inside the chip.
struct Chip {
  Matching matching;
  std::uint64_t circles = 0;

  int degree() const { return matching.degree(); }

  friend bool operator==(const Chip& a, const Chip& b) {
    return a.circles == b.circles && a.matching == b.matching;
  }
  friend bool operator!=(const Chip& a, const Chip& b) { return !(a == b); }
  friend bool operator<(const Chip& a, const Chip& b) {
    if (a.matching != b.matching) return a.matching < b.matching;
    return a.circles < b.circles;
  }
};

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > UINT64_MAX - b) throw std::overflow_error("circle count overflow");
  return a + b;
}

inline Chip new_chip(int n, const std::vector<std::pair<int, int>>& blocks, std::uint64_t d) {
  return Chip{Matching::from_blocks(n, blocks), d};
}

inline Matching identity_matching(int n) {
  if (n < 1) throw std::invalid_argument("degree must be >= 1");
  std::vector<int> partner(static_cast<std::size_t>(2 * n));
  for (int j = 0; j < n; ++j) {
    partner[static_cast<std::size_t>(j)] = n + j;
    partner[static_cast<std::size_t>(n + j)] = j;
  }
  return Matching(n, std::move(partner));
}

inline Chip identity_chip(int n) { return Chip{identity_matching(n), 0}; }

// Hook h_i: pins i,i+1 joined on each side, everything else straight through.
inline Chip hook(int n, int i) {
  if (i < 1 || i > n - 1)
    throw std::invalid_argument("hook index " + std::to_string(i) + " out of range 1.." + std::to_string(n - 1));
  std::vector<int> partner(static_cast<std::size_t>(2 * n));
  for (int j = 0; j < n; ++j) {
    partner[static_cast<std::size_t>(j)] = n + j;
    partner[static_cast<std::size_t>(n + j)] = j;
  }
  partner[static_cast<std::size_t>(i - 1)] = i;
  partner[static_cast<std::size_t>(i)] = i - 1;
  partner[static_cast<std::size_t>(n + i - 1)] = n + i;
  partner[static_cast<std::size_t>(n + i)] = n + i - 1;
  return Chip{Matching(n, std::move(partner)), 0};
}

inline Chip circle(int n) { return Chip{identity_matching(n), 1}; }

// The antidiagonal permutation chip: pin j joined to (n+1-j)'.
inline Chip alpha(int n) {
  if (n < 1) throw std::invalid_argument("degree must be >= 1");
  std::vector<int> partner(static_cast<std::size_t>(2 * n));
  for (int j = 0; j < n; ++j) {
    partner[static_cast<std::size_t>(j)] = 2 * n - 1 - j;
    partner[static_cast<std::size_t>(2 * n - 1 - j)] = j;
  }
  return Chip{Matching(n, std::move(partner)), 0};
}

// Shortcut composition. The right pins of xi and the left pins of eta are
// glued into n interface nodes; every interface node carries exactly one
// xi-wire end and one eta-wire end, so the glued wires decompose into paths
// (whose endpoints give product wires) and alternating cycles (each worth
// one extra circle).
inline Chip multiply(const Chip& xi, const Chip& eta) {
  const int n = xi.degree();
  if (n != eta.degree())
    throw std::invalid_argument("degree mismatch: " + std::to_string(n) + " vs " + std::to_string(eta.degree()));

  const auto& a = xi.matching.partners();
  const auto& b = eta.matching.partners();
  std::vector<int> prod(static_cast<std::size_t>(2 * n), -1);
  std::vector<char> mid_seen(static_cast<std::size_t>(n), 0);

  // Walks the glued interface from node m and returns the product pin where
  // the path exits: a left pin of xi (< n) or a right pin of eta (>= n).
  // consult_eta alternates because each node holds one wire end of each factor.
  const auto trace = [&](int m, bool consult_eta) {
    int cur = m;
    for (;;) {
      mid_seen[static_cast<std::size_t>(cur)] = 1;
      if (consult_eta) {
        const int w = b[static_cast<std::size_t>(cur)];
        if (w >= n) return w;
        cur = w;
      } else {
        const int w = a[static_cast<std::size_t>(n + cur)];
        if (w < n) return w;
        cur = w - n;
      }
      consult_eta = !consult_eta;
    }
  };

  for (int p = 0; p < 2 * n; ++p) {
    if (prod[static_cast<std::size_t>(p)] != -1) continue;
    int q;
    if (p < n) {
      const int w = a[static_cast<std::size_t>(p)];
      q = w < n ? w : trace(w - n, true);  // l-wire of xi survives unchanged
    } else {
      const int w = b[static_cast<std::size_t>(p)];
      q = w >= n ? w : trace(w, false);  // r-wire of eta survives unchanged
    }
    prod[static_cast<std::size_t>(p)] = q;
    prod[static_cast<std::size_t>(q)] = p;
  }

  // Interface nodes untouched by any path lie on closed alternating cycles.
  std::uint64_t cycles = 0;
  for (int m = 0; m < n; ++m) {
    if (mid_seen[static_cast<std::size_t>(m)]) continue;
    ++cycles;
    int cur = m;
    for (;;) {
      mid_seen[static_cast<std::size_t>(cur)] = 1;
      const int v = b[static_cast<std::size_t>(cur)];  // l-wire of eta
      mid_seen[static_cast<std::size_t>(v)] = 1;
      const int next = a[static_cast<std::size_t>(n + v)] - n;  // r-wire of xi
      if (next == m) break;
      cur = next;
    }
  }

  const std::uint64_t d = checked_add(checked_add(xi.circles, eta.circles), cycles);
  return Chip{Matching(n, std::move(prod)), d};
}

inline Matching star(const Matching& m) {
  const int n = m.degree();
  std::vector<int> partner(static_cast<std::size_t>(2 * n));
  const auto flip = [n](int k) { return k < n ? k + n : k - n; };
  for (int k = 0; k < 2 * n; ++k)
    partner[static_cast<std::size_t>(flip(k))] = flip(m.partner(k));
  return Matching(n, std::move(partner));
}

// Reflection: mirror along the vertical axis, swapping primed and unprimed pins.
inline Chip star(const Chip& xi) { return Chip{star(xi.matching), xi.circles}; }

// Rotation by 180 degrees, realized by its definition alpha * xi^* * alpha.
inline Chip rotate(const Chip& xi) {
  const Chip a = alpha(xi.degree());
  return multiply(multiply(a, star(xi)), a);
}

inline Matching rotate(const Matching& m) { return rotate(Chip{m, 0}).matching; }

// Boundary position of a pin in the cyclic order 1,...,n,n',(n-1)',...,1'.
inline int boundary_position(int n, int pin) {
  return pin < n ? pin : 3 * n - 1 - pin;
}

// Non-crossing test: walk the boundary and check the blocks close in
// last-opened-first-closed order (balanced-bracket scan).
inline bool is_planar(const Matching& m) {
  const int n = m.degree();
  std::vector<int> pin_at(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < 2 * n; ++k)
    pin_at[static_cast<std::size_t>(boundary_position(n, k))] = k;
  std::vector<int> stack;
  std::vector<int> pos(static_cast<std::size_t>(2 * n));
  for (int t = 0; t < 2 * n; ++t) pos[static_cast<std::size_t>(pin_at[static_cast<std::size_t>(t)])] = t;
  for (int t = 0; t < 2 * n; ++t) {
    const int k = pin_at[static_cast<std::size_t>(t)];
    const int pt = pos[static_cast<std::size_t>(m.partner(k))];
    if (pt > t) {
      stack.push_back(t);
    } else {
      if (stack.empty() || stack.back() != pt) return false;
      stack.pop_back();
    }
  }
  return true;
}

inline bool is_planar(const Chip& xi) { return is_planar(xi.matching); }

inline Matching forget(const Chip& xi) { return xi.matching; }

inline WireKind wire_kind(const Matching& m, const std::pair<int, int>& block) {
  const int n = m.degree();
  const auto [a, b] = block;
  if (a < 0 || a >= 2 * n || m.partner(a) != b)
    throw std::invalid_argument("not a block of the matching");
  const bool ar = pin_is_right(n, a), br = pin_is_right(n, b);
  if (ar && br) return WireKind::r_wire;
  if (!ar && !br) return WireKind::l_wire;
  return WireKind::t_wire;
}

struct MatchingHash {
  std::size_t operator()(const Matching& m) const noexcept {
    std::size_t h = static_cast<std::size_t>(m.degree());
    for (int p : m.partners()) h = h * 1099511628211ULL + static_cast<std::size_t>(p) + 0x9e3779b9;
    return h;
  }
};

struct ChipHash {
  std::size_t operator()(const Chip& c) const noexcept {
    return MatchingHash{}(c.matching) * 31 + static_cast<std::size_t>(c.circles);
  }
};

}  // namespace diagmon
