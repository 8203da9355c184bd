#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vass/artin.hpp"
#include "vass/intmat.hpp"
#include "vass/ncpoly.hpp"
#include "vass/presentations.hpp"
#include "vass/reduction.hpp"
#include "vass/relators.hpp"
#include "vass/words.hpp"

namespace vass {

// equality of classical braids through the faithful free-group action
inline bool braid_equal_oracle(const BraidWord& u, const BraidWord& v) {
  return braid_words_equal(u, v);
}

inline std::vector<Int> exponent_vector(const PureWord& w, const GeneratorSet& g) {
  std::vector<Int> e(g.count(), 0);
  for (const auto& l : w.letters()) {
    auto idx = g.index_of(l.i, l.j);
    e[idx] = checked_add(e[idx], l.sign);
  }
  return e;
}

// abelianization of a pure-alphabet group presentation with the classes of a
// chosen word and of the full twist
struct AbelianizationReport {
  std::string presentation;
  int n = 0;
  Int free_rank = 0;
  std::vector<Int> torsion;        // moduli > 1, each dividing the next
  std::vector<Int> word_torsion;   // parallel to torsion
  std::vector<Int> word_free;
  std::vector<Int> delta_torsion;
  std::vector<Int> delta_free;
  std::vector<std::pair<int, int>> character_support;  // triangle pairs inside {1,2,3}
  int word_character = 0;                              // value of that character on the word
};

inline AbelianizationReport h1_oracle(GroupPresentation pres, int n, const PureWord& word) {
  if (!uses_pure_alphabet(pres)) throw std::invalid_argument("oracle needs a pure-alphabet presentation");
  if (word.strands() != n) throw std::invalid_argument("word is on the wrong strand count");
  GeneratorSet g = GeneratorSet::upto(n);
  std::vector<PureWord> rels = pure_relators(n, pres);
  std::vector<std::vector<Int>> rows;
  rows.reserve(rels.size());
  for (const auto& r : rels) rows.push_back(exponent_vector(r, g));

  std::vector<std::vector<BigInt>> big(rows.size(), std::vector<BigInt>(g.count()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < g.count(); ++c) big[i][c] = rows[i][c];
  SmithForm s = smith_form(std::move(big), g.count(), true);

  AbelianizationReport rep;
  rep.presentation = presentation_name(pres);
  rep.n = n;
  rep.free_rank = static_cast<Int>(g.count() - s.factors.size());
  for (const auto& f : s.torsion()) rep.torsion.push_back(narrow_to_int(f));

  auto classify = [&](const std::vector<Int>& e, std::vector<Int>& tors, std::vector<Int>& free) {
    for (std::size_t k = 0; k < g.count(); ++k) {
      BigInt acc = 0;
      for (std::size_t i = 0; i < g.count(); ++i) acc += BigInt(e[i]) * s.right[i][k];
      if (k < s.factors.size()) {
        if (s.factors[k] == 1) continue;
        BigInt md = acc % s.factors[k];
        if (md < 0) md += s.factors[k];
        tors.push_back(narrow_to_int(md));
      } else {
        free.push_back(narrow_to_int(acc));
      }
    }
  };
  classify(exponent_vector(word, g), rep.word_torsion, rep.word_free);
  classify(exponent_vector(delta_sq_pure_word(n), g), rep.delta_torsion, rep.delta_free);

  if (rep.torsion == std::vector<Int>{2}) {
    // exponent parity over the pairs inside {1,2,3}: every relator must have an
    // even count there for this to descend to the quotient
    std::vector<std::size_t> support{g.index_of(1, 2), g.index_of(1, 3), g.index_of(2, 3)};
    for (const auto& row : rows) {
      Int s2 = 0;
      for (std::size_t idx : support) s2 += row[idx];
      if (pos_mod(s2, 2) != 0) throw std::logic_error("triangle character does not kill a relator");
    }
    Int bit = 0;
    std::vector<Int> we = exponent_vector(word, g);
    for (std::size_t idx : support) {
      rep.character_support.push_back(g.pairs[idx]);
      bit += we[idx];
    }
    rep.word_character = static_cast<int>(pos_mod(bit, 2));
  }
  return rep;
}

namespace detail {

// a*x + b*y = g >= 0 by the extended Euclid recurrence
inline BigInt big_ext_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
  BigInt old_r = a, r = b, old_x = 1, cur_x = 0, old_y = 0, cur_y = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * cur_x;
    old_x = cur_x;
    cur_x = t;
    t = old_y - q * cur_y;
    old_y = cur_y;
    cur_y = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  x = old_x;
  y = old_y;
  return old_r;
}

// echelon form by pairwise unimodular gcd steps, with a separate pass that
// reduces the entries above each pivot afterwards
inline void naive_echelon(std::vector<std::vector<BigInt>>& rows, std::size_t cols,
                          std::vector<std::size_t>& pivots) {
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < rows.size(); ++j) {
    std::size_t first = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i)
      if (rows[i][j] != 0) {
        first = i;
        break;
      }
    if (first == rows.size()) continue;
    std::swap(rows[r], rows[first]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][j] == 0) continue;
      BigInt x, y;
      BigInt gd = big_ext_gcd(rows[r][j], rows[i][j], x, y);
      BigInt a = rows[r][j] / gd, b = rows[i][j] / gd;
      for (std::size_t c = j; c < cols; ++c) {
        BigInt top = x * rows[r][c] + y * rows[i][c];
        BigInt bot = a * rows[i][c] - b * rows[r][c];
        rows[r][c] = std::move(top);
        rows[i][c] = std::move(bot);
      }
    }
    if (rows[r][j] < 0)
      for (std::size_t c = j; c < cols; ++c) rows[r][c] = -rows[r][c];
    pivots.push_back(j);
    ++r;
  }
  rows.resize(r);
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t i = 0; i < k; ++i) {
      BigInt q = big_floor_div(rows[i][pivots[k]], rows[k][pivots[k]]);
      if (q == 0) continue;
      for (std::size_t c = pivots[k]; c < cols; ++c) rows[i][c] -= q * rows[k][c];
    }
}

}  // namespace detail

// tableless re-derivation of canonical coordinates: rebuilds and solves the
// relator span from scratch on every call, with everything ordered differently
// from the table path
inline CanonicalElement naive_reduce_oracle(const NCPoly& u, AlgebraPresentation pres) {
  int N = u.index_bound();
  int m = u.truncation();
  if (m > 3) throw std::invalid_argument("oracle degree guard: truncation <= 3");
  std::size_t gens = generator_count(N);

  std::vector<NCPoly> relators = algebra_relators(pres, N);
  std::reverse(relators.begin(), relators.end());

  CanonicalElement e;
  e.pres = pres;
  e.N = N;
  e.m = m;
  for (int d = 0; d <= m; ++d) {
    std::uint64_t monos = monomial_count(gens, d);
    std::vector<std::vector<BigInt>> span;
    for (const auto& rel : relators) {
      int er = -1;
      for (int k = 0; k <= rel.truncation(); ++k)
        for (Int c : rel.component(k))
          if (c != 0) {
            er = k;
            k = rel.truncation();
            break;
          }
      if (er < 0 || er > d) continue;
      std::uint64_t pe = monomial_count(gens, er);
      const auto& comp = rel.component(er);
      for (int dv = 0; dv + er <= d; ++dv) {
        int du = d - er - dv;
        std::uint64_t pu = monomial_count(gens, du);
        std::uint64_t pv = monomial_count(gens, dv);
        for (std::uint64_t cv = 0; cv < pv; ++cv)
          for (std::uint64_t cu = 0; cu < pu; ++cu) {
            std::vector<BigInt> row(static_cast<std::size_t>(monos), 0);
            for (std::uint64_t cm = 0; cm < pe; ++cm) {
              Int c = comp[static_cast<std::size_t>(cm)];
              if (c != 0) row[static_cast<std::size_t>((cu * pe + cm) * pv + cv)] += c;
            }
            span.push_back(std::move(row));
          }
      }
    }
    std::vector<std::size_t> pivots;
    detail::naive_echelon(span, static_cast<std::size_t>(monos), pivots);

    std::vector<BigInt> v(static_cast<std::size_t>(monos));
    const auto& comp = u.component(d);
    for (std::size_t c = 0; c < comp.size(); ++c) v[c] = comp[c];
    for (std::size_t k = 0; k < span.size(); ++k) {
      BigInt q = big_floor_div(v[pivots[k]], span[k][pivots[k]]);
      if (q == 0) continue;
      for (std::size_t c = pivots[k]; c < v.size(); ++c) v[c] -= q * span[k][c];
    }
    std::vector<Int> coords;
    std::size_t next = 0;
    for (std::uint64_t col = 0; col < monos; ++col) {
      if (next < pivots.size() && pivots[next] == col) {
        BigInt diag = span[next][static_cast<std::size_t>(col)];
        ++next;
        if (diag == 1) continue;
      }
      coords.push_back(narrow_to_int(v[static_cast<std::size_t>(col)]));
    }
    e.coords.push_back(std::move(coords));
  }
  return e;
}

}  // namespace vass
