#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vass/ints.hpp"
#include "vass/perm.hpp"
#include "vass/words.hpp"

namespace vass {

// index pairs (i,j), i < j <= N, in lexicographic order
struct GeneratorSet {
  int N = 0;
  std::vector<std::pair<int, int>> pairs;

  static GeneratorSet upto(int n) {
    if (n < 1) throw std::invalid_argument("generator index bound must be at least 1");
    GeneratorSet g;
    g.N = n;
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) g.pairs.emplace_back(i, j);
    return g;
  }

  std::size_t count() const { return pairs.size(); }

  std::size_t index_of(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (!(1 <= i && i < j && j <= N))
      throw std::invalid_argument("generator index out of range");
    std::size_t before = static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(2 * N - i) / 2;
    return before + static_cast<std::size_t>(j - i - 1);
  }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;
};

inline std::size_t generator_count(int N) {
  return static_cast<std::size_t>(N) * static_cast<std::size_t>(N - 1) / 2;
}

// monomials of a fixed degree are coded as base-G digit strings, leftmost letter
// in the most significant position
inline std::uint64_t monomial_count(std::size_t gens, int degree) {
  std::uint64_t c = 1;
  for (int t = 0; t < degree; ++t) {
    if (gens != 0 && c > (std::uint64_t{1} << 62) / gens)
      throw std::overflow_error("monomial space too large");
    c *= gens;
  }
  return c;
}

inline std::vector<int> monomial_digits(std::uint64_t code, int degree, std::size_t gens) {
  std::vector<int> d(static_cast<std::size_t>(degree));
  for (int t = degree - 1; t >= 0; --t) {
    d[static_cast<std::size_t>(t)] = static_cast<int>(code % gens);
    code /= gens;
  }
  return d;
}

inline std::string monomial_str(std::uint64_t code, int degree, const GeneratorSet& g) {
  if (degree == 0) return "-";
  std::ostringstream os;
  auto digits = monomial_digits(code, degree, g.count());
  for (std::size_t t = 0; t < digits.size(); ++t) {
    if (t) os << '.';
    const auto& p = g.pairs[static_cast<std::size_t>(digits[t])];
    os << p.first << ',' << p.second;
  }
  return os.str();
}

// truncated polynomial in noncommuting generators indexed by pairs (i,j), i<j<=N;
// dense coefficient vectors per degree 0..m
class NCPoly {
 public:
  NCPoly(int N, int m) : N_(N), m_(m), gens_(generator_count(N)) {
    if (N < 1 || m < 0) throw std::invalid_argument("bad truncation parameters");
    comps_.resize(static_cast<std::size_t>(m) + 1);
    for (int d = 0; d <= m; ++d)
      comps_[static_cast<std::size_t>(d)].assign(monomial_count(gens_, d), 0);
  }

  static NCPoly unit(int N, int m) {
    NCPoly p(N, m);
    p.comps_[0][0] = 1;
    return p;
  }

  static NCPoly generator(int N, int m, int i, int j) {
    NCPoly p(N, m);
    if (m >= 1) p.comps_[1][GeneratorSet::upto(N).index_of(i, j)] = 1;
    return p;
  }

  int index_bound() const { return N_; }
  int truncation() const { return m_; }
  std::size_t gens() const { return gens_; }
  const std::vector<Int>& component(int d) const { return comps_[static_cast<std::size_t>(d)]; }
  std::vector<Int>& component(int d) { return comps_[static_cast<std::size_t>(d)]; }

  Int coeff(int d, std::uint64_t code) const {
    return comps_[static_cast<std::size_t>(d)][static_cast<std::size_t>(code)];
  }
  void add_coeff(int d, std::uint64_t code, Int c) {
    auto& slot = comps_[static_cast<std::size_t>(d)][static_cast<std::size_t>(code)];
    slot = checked_add(slot, c);
  }

  NCPoly& operator+=(const NCPoly& o) {
    check_same(o);
    for (int d = 0; d <= m_; ++d) {
      auto& mine = comps_[static_cast<std::size_t>(d)];
      const auto& theirs = o.comps_[static_cast<std::size_t>(d)];
      for (std::size_t t = 0; t < mine.size(); ++t) mine[t] = checked_add(mine[t], theirs[t]);
    }
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    check_same(o);
    for (int d = 0; d <= m_; ++d) {
      auto& mine = comps_[static_cast<std::size_t>(d)];
      const auto& theirs = o.comps_[static_cast<std::size_t>(d)];
      for (std::size_t t = 0; t < mine.size(); ++t) mine[t] = checked_sub(mine[t], theirs[t]);
    }
    return *this;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }

  NCPoly& scale(Int c) {
    for (auto& comp : comps_)
      for (auto& v : comp) v = checked_mul(v, c);
    return *this;
  }

  bool is_zero() const {
    for (const auto& comp : comps_)
      for (Int v : comp)
        if (v != 0) return false;
    return true;
  }

  friend bool operator==(const NCPoly&, const NCPoly&) = default;

  std::string str() const {
    GeneratorSet g = GeneratorSet::upto(N_);
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= m_; ++d) {
      const auto& comp = comps_[static_cast<std::size_t>(d)];
      for (std::size_t code = 0; code < comp.size(); ++code) {
        if (comp[code] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << comp[code] << "*" << monomial_str(code, d, g);
      }
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  void check_same(const NCPoly& o) const {
    if (N_ != o.N_ || m_ != o.m_) throw std::invalid_argument("mismatched polynomial parameters");
  }

  int N_;
  int m_;
  std::size_t gens_;
  std::vector<std::vector<Int>> comps_;
};

// concatenation product with truncation
inline NCPoly nc_mul(const NCPoly& a, const NCPoly& b) {
  if (a.index_bound() != b.index_bound() || a.truncation() != b.truncation())
    throw std::invalid_argument("mismatched polynomial parameters");
  int m = a.truncation();
  std::size_t g = a.gens();
  NCPoly out(a.index_bound(), m);
  for (int d = 0; d <= m; ++d) {
    auto& dst = out.component(d);
    for (int d1 = 0; d1 <= d; ++d1) {
      int d2 = d - d1;
      const auto& lhs = a.component(d1);
      const auto& rhs = b.component(d2);
      std::uint64_t shift = monomial_count(g, d2);
      for (std::size_t i1 = 0; i1 < lhs.size(); ++i1) {
        if (lhs[i1] == 0) continue;
        std::size_t base = static_cast<std::size_t>(i1 * shift);
        for (std::size_t i2 = 0; i2 < rhs.size(); ++i2) {
          if (rhs[i2] == 0) continue;
          dst[base + i2] = checked_add(dst[base + i2], checked_mul(lhs[i1], rhs[i2]));
        }
      }
    }
  }
  return out;
}

namespace detail {

// p * A_g: every monomial gains the generator on the right
inline NCPoly shift_right(const NCPoly& p, std::size_t gen_index) {
  int m = p.truncation();
  NCPoly out(p.index_bound(), m);
  std::size_t g = p.gens();
  for (int d = 1; d <= m; ++d) {
    const auto& src = p.component(d - 1);
    auto& dst = out.component(d);
    for (std::size_t code = 0; code < src.size(); ++code)
      if (src[code] != 0) dst[code * g + gen_index] = src[code];
  }
  return out;
}

}  // namespace detail

// p * image(letter): a positive letter contributes 1 + A, a negative one the
// truncated geometric series 1 - A + A^2 - ...
inline NCPoly magnus_letter_mul(const NCPoly& p, std::size_t gen_index, int sign) {
  NCPoly out = p;
  if (sign > 0) {
    out += detail::shift_right(p, gen_index);
    return out;
  }
  NCPoly acc = p;
  for (int t = 1; t <= p.truncation(); ++t) {
    acc = detail::shift_right(acc, gen_index);
    if (acc.is_zero()) break;
    if (t % 2 == 1)
      out -= acc;
    else
      out += acc;
  }
  return out;
}

inline NCPoly magnus_expand(const PureWord& w, int N, int m) {
  GeneratorSet g = GeneratorSet::upto(N);
  NCPoly out = NCPoly::unit(N, m);
  for (const auto& l : w.letters()) out = magnus_letter_mul(out, g.index_of(l.i, l.j), l.sign);
  return out;
}

// homomorphic substitution: every source generator is replaced by a degree-1
// polynomial over the target generators (one coefficient row per source generator)
inline NCPoly substitute_generators(const NCPoly& u, int target_N,
                                    const std::vector<std::vector<Int>>& rules) {
  std::size_t src_gens = u.gens();
  std::size_t tgt_gens = generator_count(target_N);
  if (rules.size() != src_gens) throw std::invalid_argument("one substitution rule per generator");
  for (const auto& r : rules)
    if (r.size() != tgt_gens) throw std::invalid_argument("substitution rule has wrong width");
  int m = u.truncation();
  NCPoly out(target_N, m);
  out.component(0) = u.component(0);
  for (int d = 1; d <= m; ++d) {
    const auto& src = u.component(d);
    for (std::size_t code = 0; code < src.size(); ++code) {
      if (src[code] == 0) continue;
      auto digits = monomial_digits(code, d, src_gens);
      std::vector<Int> cur{src[code]};
      for (int g : digits) {
        const auto& rule = rules[static_cast<std::size_t>(g)];
        std::vector<Int> next(cur.size() * tgt_gens, 0);
        for (std::size_t i = 0; i < cur.size(); ++i) {
          if (cur[i] == 0) continue;
          for (std::size_t h = 0; h < tgt_gens; ++h)
            if (rule[h] != 0)
              next[i * tgt_gens + h] =
                  checked_add(next[i * tgt_gens + h], checked_mul(cur[i], rule[h]));
        }
        cur = std::move(next);
      }
      auto& dst = out.component(d);
      for (std::size_t t = 0; t < cur.size(); ++t) dst[t] = checked_add(dst[t], cur[t]);
    }
  }
  return out;
}

// rules sending x_{i,n} to minus the sum of the other entries of its row, and
// every x_{i,j} with j < n to itself
inline std::vector<std::vector<Int>> elimination_rules(int n) {
  if (n < 2) throw std::invalid_argument("elimination needs n >= 2");
  GeneratorSet src = GeneratorSet::upto(n);
  GeneratorSet tgt = GeneratorSet::upto(n - 1);
  std::vector<std::vector<Int>> rules(src.count(), std::vector<Int>(tgt.count(), 0));
  for (std::size_t g = 0; g < src.count(); ++g) {
    auto [i, j] = src.pairs[g];
    if (j < n) {
      rules[g][tgt.index_of(i, j)] = 1;
    } else {
      for (int t = 1; t <= n - 1; ++t)
        if (t != i) rules[g][tgt.index_of(std::min(i, t), std::max(i, t))] -= 1;
    }
  }
  return rules;
}

// rules for the index action of a permutation of {1..N+1} on generators with
// indices <= N: x_{i,j} goes to x_{p(i),p(j)}, and an image touching N+1 is
// rewritten through the row rule
inline std::vector<std::vector<Int>> permutation_rules(const Permutation& p, int N) {
  if (p.size() != N + 1) throw std::invalid_argument("permutation must act on N+1 points");
  GeneratorSet g = GeneratorSet::upto(N);
  auto elim = elimination_rules(N + 1);
  GeneratorSet big = GeneratorSet::upto(N + 1);
  std::vector<std::vector<Int>> rules(g.count());
  for (std::size_t s = 0; s < g.count(); ++s) {
    auto [i, j] = g.pairs[s];
    int a = p(i), b = p(j);
    if (a > b) std::swap(a, b);
    rules[s] = elim[big.index_of(a, b)];
  }
  return rules;
}

}  // namespace vass
