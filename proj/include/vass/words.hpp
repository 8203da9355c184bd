#pragma once

#include <cctype>
#include <compare>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "vass/ints.hpp"
#include "vass/perm.hpp"

namespace vass {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct SigmaLetter {
  int index;  // 1 <= index <= n-1
  int sign;   // +1 or -1
  friend bool operator==(const SigmaLetter&, const SigmaLetter&) = default;
  friend auto operator<=>(const SigmaLetter&, const SigmaLetter&) = default;
};

// Word in the crossing generators s1..s(n-1); composition reads left to right.
class BraidWord {
 public:
  BraidWord() : n_(2) {}
  explicit BraidWord(int n) : n_(check_n(n)) {}
  BraidWord(int n, std::vector<SigmaLetter> letters) : n_(check_n(n)), letters_(std::move(letters)) {
    for (const auto& l : letters_) check_letter(l);
  }

  int strands() const { return n_; }
  const std::vector<SigmaLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void push(int index, int sign) {
    SigmaLetter l{index, sign};
    check_letter(l);
    letters_.push_back(l);
  }

  BraidWord& operator*=(const BraidWord& w) {
    if (w.n_ != n_) throw std::invalid_argument("strand count mismatch in concatenation");
    letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
    return *this;
  }
  friend BraidWord operator*(BraidWord a, const BraidWord& b) { return a *= b; }

  BraidWord inverse() const {
    BraidWord r(n_);
    r.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      r.letters_.push_back({it->index, -it->sign});
    return r;
  }

  // free reduction: cancel adjacent s_i s_i^{-1}
  BraidWord reduced() const {
    BraidWord r(n_);
    r.letters_.reserve(letters_.size());
    for (const auto& l : letters_) {
      if (!r.letters_.empty() && r.letters_.back().index == l.index &&
          r.letters_.back().sign == -l.sign)
        r.letters_.pop_back();
      else
        r.letters_.push_back(l);
    }
    return r;
  }

  BraidWord pow(int e) const {
    BraidWord base = e >= 0 ? *this : inverse();
    BraidWord r(n_);
    for (int t = 0; t < (e >= 0 ? e : -e); ++t) r *= base;
    return r;
  }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& l : letters_) {
      if (!first) os << ' ';
      first = false;
      os << 's' << l.index;
      if (l.sign < 0) os << "^-1";
    }
    return os.str();
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend auto operator<=>(const BraidWord& a, const BraidWord& b) {
    return std::tie(a.n_, a.letters_) <=> std::tie(b.n_, b.letters_);
  }

 private:
  static int check_n(int n) {
    if (n < 1) throw std::invalid_argument("strand count must be at least 1");
    return n;
  }
  void check_letter(const SigmaLetter& l) const {
    if (l.index < 1 || l.index > n_ - 1) throw std::invalid_argument("crossing index out of range");
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("crossing sign must be +-1");
  }

  int n_;
  std::vector<SigmaLetter> letters_;
};

struct PureLetter {
  int i, j;  // 1 <= i < j <= n
  int sign;
  friend bool operator==(const PureLetter&, const PureLetter&) = default;
  friend auto operator<=>(const PureLetter&, const PureLetter&) = default;
};

class PureWord;
inline BraidWord expand_pure_generator(int i, int j, int n);

// Word in the pure generators a(i,j); a(j,i) is normalized to a(i,j) on entry.
class PureWord {
 public:
  PureWord() : n_(2) {}
  explicit PureWord(int n) : n_(check_n(n)) {}
  PureWord(int n, std::vector<PureLetter> letters) : n_(check_n(n)), letters_(std::move(letters)) {
    for (auto& l : letters_) {
      if (l.i > l.j) std::swap(l.i, l.j);
      check_letter(l);
    }
  }

  int strands() const { return n_; }
  const std::vector<PureLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void push(int i, int j, int sign) {
    if (i > j) std::swap(i, j);
    PureLetter l{i, j, sign};
    check_letter(l);
    letters_.push_back(l);
  }

  PureWord& operator*=(const PureWord& w) {
    if (w.n_ != n_) throw std::invalid_argument("strand count mismatch in concatenation");
    letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
    return *this;
  }
  friend PureWord operator*(PureWord a, const PureWord& b) { return a *= b; }

  PureWord inverse() const {
    PureWord r(n_);
    r.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      r.letters_.push_back({it->i, it->j, -it->sign});
    return r;
  }

  PureWord reduced() const {
    PureWord r(n_);
    r.letters_.reserve(letters_.size());
    for (const auto& l : letters_) {
      if (!r.letters_.empty() && r.letters_.back().i == l.i && r.letters_.back().j == l.j &&
          r.letters_.back().sign == -l.sign)
        r.letters_.pop_back();
      else
        r.letters_.push_back(l);
    }
    return r;
  }

  PureWord pow(int e) const {
    PureWord base = e >= 0 ? *this : inverse();
    PureWord r(n_);
    for (int t = 0; t < (e >= 0 ? e : -e); ++t) r *= base;
    return r;
  }

  BraidWord expand() const {
    BraidWord r(n_);
    for (const auto& l : letters_) {
      BraidWord g = expand_pure_generator(l.i, l.j, n_);
      r *= (l.sign > 0 ? g : g.inverse());
    }
    return r;
  }

  Int exponent_sum(int i, int j) const {
    if (i > j) std::swap(i, j);
    Int e = 0;
    for (const auto& l : letters_)
      if (l.i == i && l.j == j) e = checked_add(e, l.sign);
    return e;
  }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& l : letters_) {
      if (!first) os << ' ';
      first = false;
      os << 'a' << l.i << ',' << l.j;
      if (l.sign < 0) os << "^-1";
    }
    return os.str();
  }

  friend bool operator==(const PureWord&, const PureWord&) = default;
  friend auto operator<=>(const PureWord& a, const PureWord& b) {
    return std::tie(a.n_, a.letters_) <=> std::tie(b.n_, b.letters_);
  }

 private:
  static int check_n(int n) {
    if (n < 1) throw std::invalid_argument("strand count must be at least 1");
    return n;
  }
  void check_letter(const PureLetter& l) const {
    if (!(1 <= l.i && l.i < l.j && l.j <= n_))
      throw std::invalid_argument("pure generator indices out of range");
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("pure generator sign must be +-1");
  }

  int n_;
  std::vector<PureLetter> letters_;
};

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.push_back(text.substr(start, i - start));
  }
  return out;
}

// parses "<int>" from tok[pos...], advancing pos; throws on failure
inline int parse_int_at(std::string_view tok, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
  if (pos == start) throw ParseError("malformed token '" + std::string(tok) + "'");
  int value = 0;
  for (std::size_t t = start; t < pos; ++t) {
    value = value * 10 + (tok[t] - '0');
    if (value > 1'000'000) throw ParseError("index too large in '" + std::string(tok) + "'");
  }
  return value;
}

// consumes an optional "^-1" suffix; returns the sign
inline int parse_sign_suffix(std::string_view tok, std::size_t& pos) {
  if (pos == tok.size()) return 1;
  if (tok.substr(pos) == "^-1") {
    pos = tok.size();
    return -1;
  }
  throw ParseError("malformed exponent in '" + std::string(tok) + "' (only ^-1 is accepted)");
}

}  // namespace detail

inline BraidWord parse_braid_word(std::string_view text, int n) {
  BraidWord w(n);
  for (auto tok : detail::split_tokens(text)) {
    if (tok[0] != 's') throw ParseError("expected crossing token, got '" + std::string(tok) + "'");
    std::size_t pos = 1;
    int index = detail::parse_int_at(tok, pos);
    int sign = detail::parse_sign_suffix(tok, pos);
    if (index < 1 || index > n - 1)
      throw ParseError("crossing index out of range in '" + std::string(tok) + "'");
    w.push(index, sign);
  }
  return w;
}

inline PureWord parse_pure_word(std::string_view text, int n) {
  PureWord w(n);
  for (auto tok : detail::split_tokens(text)) {
    if (tok[0] != 'a') throw ParseError("expected pure token, got '" + std::string(tok) + "'");
    std::size_t pos = 1;
    int i = detail::parse_int_at(tok, pos);
    if (pos == tok.size() || tok[pos] != ',')
      throw ParseError("malformed token '" + std::string(tok) + "'");
    ++pos;
    int j = detail::parse_int_at(tok, pos);
    int sign = detail::parse_sign_suffix(tok, pos);
    if (i > j) std::swap(i, j);
    if (!(1 <= i && i < j && j <= n))
      throw ParseError("pure generator indices out of range in '" + std::string(tok) + "'");
    w.push(i, j, sign);
  }
  return w;
}

inline Permutation permutation_of(const BraidWord& w) {
  Permutation p(w.strands());
  for (const auto& l : w.letters()) p.cross(l.index);
  return p;
}

// deterministic section: bubble-sort the image list to the identity, recording the
// swapped positions left to right; permutation_of(section_word(p)) == p
inline BraidWord section_word(const Permutation& p) {
  int n = p.size();
  std::vector<int> list(p.images());
  BraidWord w(n);
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (int i = 1; i <= n - 1; ++i) {
      if (list[static_cast<std::size_t>(i - 1)] > list[static_cast<std::size_t>(i)]) {
        std::swap(list[static_cast<std::size_t>(i - 1)], list[static_cast<std::size_t>(i)]);
        w.push(i, 1);
        swapped = true;
      }
    }
  }
  return w;
}

// b = q * section_word(p) with q pure; returns (q, p)
inline std::pair<BraidWord, Permutation> pure_part(const BraidWord& b) {
  Permutation p = permutation_of(b);
  BraidWord q = (b * section_word(p).inverse()).reduced();
  return {std::move(q), std::move(p)};
}

// removes strand k (which the word's permutation must fix) and reindexes
inline BraidWord delete_strand(const BraidWord& w, int k) {
  if (k < 1 || k > w.strands()) throw std::invalid_argument("strand index out of range");
  if (permutation_of(w)(k) != k)
    throw std::invalid_argument("delete_strand requires the permutation to fix the strand");
  BraidWord r(w.strands() - 1);
  int cur = k;
  for (const auto& l : w.letters()) {
    if (cur == l.index) {
      cur = l.index + 1;
    } else if (cur == l.index + 1) {
      cur = l.index;
    } else {
      r.push(l.index > cur ? l.index - 1 : l.index, l.sign);
    }
  }
  return r;
}

// the same word viewed with extra trivial strands on top
inline BraidWord embed_word(const BraidWord& w, int n) {
  if (n < w.strands()) throw std::invalid_argument("cannot embed into fewer strands");
  return BraidWord(n, w.letters());
}

// a(i,j) = s(j-1) ... s(i+1) s(i)^2 s(i+1)^-1 ... s(j-1)^-1
inline BraidWord expand_pure_generator(int i, int j, int n) {
  if (i > j) std::swap(i, j);
  if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("pure generator indices out of range");
  BraidWord w(n);
  for (int t = j - 1; t >= i + 1; --t) w.push(t, 1);
  w.push(i, 1);
  w.push(i, 1);
  for (int t = i + 1; t <= j - 1; ++t) w.push(t, -1);
  return w;
}

// half twist: (s1..s(n-1)) (s1..s(n-2)) ... (s1)
inline BraidWord delta_word(int n) {
  BraidWord w(n);
  for (int t = n - 1; t >= 1; --t)
    for (int s = 1; s <= t; ++s) w.push(s, 1);
  return w;
}

inline BraidWord delta_sq_word(int n) { return delta_word(n) * delta_word(n); }

// full twist as a pure word: (a12)(a13 a23)(a14 a24 a34)...
inline PureWord delta_sq_pure_word(int n) {
  PureWord w(n);
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) w.push(i, j, 1);
  return w;
}

}  // namespace vass
