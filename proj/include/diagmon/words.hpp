// Plain and involutory words over letters x1, x2, ..., Zimin words, and
// two-sided identities.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "diagmon/parse_util.hpp"

namespace diagmon {

struct Letter {
  int id = 1;        // the subscript of x
  bool starred = false;

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.id == b.id && a.starred == b.starred;
  }
  friend bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }
  friend bool operator<(const Letter& a, const Letter& b) {
    return a.id != b.id ? a.id < b.id : a.starred < b.starred;
  }
};

struct InvWord {
  std::vector<Letter> letters;

  explicit InvWord(std::vector<Letter> ls) : letters(std::move(ls)) {
    if (letters.empty()) throw std::invalid_argument("a word must not be empty");
  }

  std::size_t length() const { return letters.size(); }

  bool plain() const {
    return std::none_of(letters.begin(), letters.end(), [](const Letter& l) { return l.starred; });
  }

  // Sorted distinct letter ids.
  std::vector<int> letter_ids() const {
    std::vector<int> ids;
    for (const Letter& l : letters) ids.push_back(l.id);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
  }

  friend bool operator==(const InvWord& a, const InvWord& b) { return a.letters == b.letters; }
  friend bool operator!=(const InvWord& a, const InvWord& b) { return !(a == b); }
};

inline InvWord concat(const InvWord& a, const InvWord& b) {
  std::vector<Letter> ls = a.letters;
  ls.insert(ls.end(), b.letters.begin(), b.letters.end());
  return InvWord(std::move(ls));
}

// Z_1 = x1, Z_{n+1} = Z_n x_{n+1} Z_n; length 2^n - 1 and letter x_i occurs
// 2^(n-i) times. Capped because the length doubles per step.
inline InvWord zimin(int n) {
  if (n < 1) throw std::invalid_argument("zimin index must be >= 1");
  if (n > 22) throw std::invalid_argument("zimin(" + std::to_string(n) + ") would have 2^" + std::to_string(n) + "-1 letters; bound is 22");
  std::vector<Letter> w = {Letter{1, false}};
  for (int i = 2; i <= n; ++i) {
    std::vector<Letter> next = w;
    next.push_back(Letter{i, false});
    next.insert(next.end(), w.begin(), w.end());
    w = std::move(next);
  }
  return InvWord(std::move(w));
}

// (x1 ... xm)* = xm* ... x1*: reverse and toggle every star.
inline InvWord word_star(const InvWord& w) {
  std::vector<Letter> out(w.letters.rbegin(), w.letters.rend());
  for (Letter& l : out) l.starred = !l.starred;
  return InvWord(std::move(out));
}

// Occurrences of the letter, starred or not.
inline int occurrences(const InvWord& w, int letter_id) {
  int count = 0;
  for (const Letter& l : w.letters)
    if (l.id == letter_id) ++count;
  return count;
}

inline int starred_occurrences(const InvWord& w, int letter_id) {
  int count = 0;
  for (const Letter& l : w.letters)
    if (l.id == letter_id && l.starred) ++count;
  return count;
}

struct Identity {
  InvWord lhs;
  InvWord rhs;

  bool involutory() const { return !lhs.plain() || !rhs.plain(); }

  std::vector<int> letter_ids() const {
    std::vector<int> ids = lhs.letter_ids();
    const std::vector<int> r = rhs.letter_ids();
    ids.insert(ids.end(), r.begin(), r.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
  }
};

// Grammar: letters `x<k>`, star suffix `*`, juxtaposition with optional
// whitespace. Example: `x1 x2* x1`.
inline InvWord parse_word(std::string_view text) {
  detail::Cursor cur(text);
  std::vector<Letter> letters;
  while (!cur.done()) {
    if (!cur.accept('x') && !cur.accept('X'))
      throw ParseError("expected a letter of the form x<k>", cur.column());
    const std::size_t col = cur.column();
    const std::uint64_t id = cur.integer();
    if (id < 1 || id > 1000000) throw ParseError("letter index out of range", col);
    const bool starred = cur.accept('*');
    letters.push_back(Letter{static_cast<int>(id), starred});
  }
  if (letters.empty()) throw ParseError("empty word", 1);
  return InvWord(std::move(letters));
}

inline std::string format_word(const InvWord& w) {
  std::string out;
  for (const Letter& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(l.id);
    if (l.starred) out += '*';
  }
  return out;
}

// `LHS = RHS` with word syntax on both sides.
inline Identity parse_identity(std::string_view text) {
  const std::size_t eq = text.find('=');
  if (eq == std::string_view::npos) throw ParseError("identity needs a '=' separator", text.size() + 1);
  if (text.find('=', eq + 1) != std::string_view::npos)
    throw ParseError("identity has more than one '='", text.find('=', eq + 1) + 1);
  return Identity{parse_word(text.substr(0, eq)), parse_word(text.substr(eq + 1))};
}

inline std::string format_identity(const Identity& id) {
  return format_word(id.lhs) + " = " + format_word(id.rhs);
}

}  // namespace diagmon
