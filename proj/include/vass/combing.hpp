#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "vass/artin.hpp"
#include "vass/words.hpp"

namespace vass {

struct CombError : std::runtime_error {
  explicit CombError(const std::string& what) : std::runtime_error(what) {}
};

struct DecodeError : std::runtime_error {
  explicit DecodeError(const std::string& what) : std::runtime_error(what) {}
};

// Decodes a pure word on k strands that dies under strand-k deletion into the free
// word over {a(1,k)..a(k-1,k)} it represents.
//
// The image of x_k under the Artin action is W x_k W^{-1}; killing every x_k letter
// of W retracts it into the free group on x_1..x_{k-1}, and that retraction is an
// isomorphism from the kernel onto it sending a(i,k) to x_i (the conjugator of a
// product twists by inner factors that the retraction kills). The decoded word is
// re-encoded and checked against the Artin action before it is returned.
inline PureWord decode_kernel(const BraidWord& w, int k) {
  if (w.strands() != k) throw std::invalid_argument("decode_kernel expects a word on k strands");
  if (k < 2) throw std::invalid_argument("decode_kernel needs k >= 2");
  if (!artin_automorphism(delete_strand(w, k)).is_identity())
    throw DecodeError("word does not die under strand deletion");

  FreeAutomorphism phi = artin_automorphism(w);
  const FreeWord& img = phi.image(k);
  if (img.size() % 2 != 1 || img[img.size() / 2] != k)
    throw DecodeError("image of the deleted strand generator is not a conjugate of it");

  PureWord beta(k);
  for (std::size_t t = 0; t < img.size() / 2; ++t) {
    std::int32_t l = img[t];
    int g = l > 0 ? l : -l;
    if (g == k) continue;  // retraction kills the deleted strand's generator
    beta.push(g, k, l > 0 ? 1 : -1);
  }
  beta = beta.reduced();

  if (artin_automorphism(beta.expand()) != phi)
    throw DecodeError("kernel decode failed verification for '" + w.str() + "'");
  return beta;
}

// Combed form of a pure braid: factors (beta_n, ..., beta_2), where beta_k is a word
// over {a(i,k)} and the product beta_n beta_(n-1) ... beta_2 recovers the input.
struct CombedForm {
  int n = 2;
  std::vector<PureWord> factors;  // factors[0] is beta_n, each on n strands

  PureWord flatten() const {
    PureWord w(n);
    for (const auto& f : factors)
      for (const auto& l : f.letters()) w.push(l.i, l.j, l.sign);
    return w;
  }

  BraidWord expand() const { return flatten().expand(); }
};

namespace detail {

// combing through the free group action; the image sizes explode on long
// words, so this only ever sees the bounded pieces cut by pure_letters_of
// and the small words of the unit tests
inline CombedForm comb_via_artin(const BraidWord& input) {
  int n = input.strands();
  if (!permutation_of(input).is_identity())
    throw std::invalid_argument("comb requires a pure braid word");
  CombedForm out;
  out.n = n;
  BraidWord q = input.reduced();
  for (int k = n; k >= 3; --k) {
    BraidWord qbar = delete_strand(q, k);
    BraidWord w = (q * embed_word(qbar, k).inverse()).reduced();
    PureWord beta = decode_kernel(w, k);
    out.factors.push_back(PureWord(n, beta.letters()));
    q = qbar;
  }
  if (n >= 2) {
    Int e = 0;
    for (const auto& l : q.letters()) e += l.sign;
    if (pos_mod(e, 2) != 0) throw CombError("two-strand part of a pure braid has odd exponent");
    PureWord beta2(n);
    for (Int t = 0; t < (e >= 0 ? e : -e) / 2; ++t) beta2.push(1, 2, e >= 0 ? 1 : -1);
    out.factors.push_back(std::move(beta2));
  }
  if (!braid_words_equal(out.expand(), input))
    throw CombError("combed form failed to multiply back to the input");
  return out;
}

// conjugation by a generator on the kernel free group x_r = a(r,k): for a
// word v away from strand k, v a(r,k) v^{-1} is the image of x_r under the
// free group action of v^{-1}
inline FreeAutomorphism conjugation_action(const PureLetter& l, int m) {
  BraidWord g = expand_pure_generator(l.i, l.j, m);
  return artin_automorphism(l.sign > 0 ? g.inverse() : g);
}

}  // namespace detail

// Rewrites a sigma word as a word in the pure generators. Every letter is
// pulled back to the identity frame through the positive lifts of its prefix
// permutations, so each piece stays bounded by two section words no matter
// how long the input is. A crossing that merely extends the lift contributes
// nothing.
inline PureWord pure_letters_of(const BraidWord& q) {
  int n = q.strands();
  PureWord out(n);
  Permutation pi(n);
  BraidWord lift = section_word(pi);
  for (const auto& l : q.letters()) {
    int u = 0, v = 0;  // strands sitting at the crossed positions
    for (int s = 1; s <= n; ++s) {
      if (pi(s) == l.index) u = s;
      if (pi(s) == l.index + 1) v = s;
    }
    Permutation pi2 = pi;
    pi2.cross(l.index);
    BraidWord next = section_word(pi2);
    if ((l.sign > 0) != (u < v)) {
      BraidWord piece = lift;
      piece.push(l.index, l.sign);
      piece *= next.inverse();
      PureWord got = detail::comb_via_artin(piece.reduced()).flatten();
      for (const auto& pl : got.letters()) out.push(pl.i, pl.j, pl.sign);
    }
    pi = std::move(pi2);
    lift = std::move(next);
  }
  if (!pi.is_identity()) throw std::invalid_argument("pure braid word required");
  return out.reduced();
}

// Combs a word already written in the pure generators, peeling strands from
// the top. The kernel factor collects the generators a(i,k) conjugated by
// their prefix of lower letters, and that conjugation is tracked as a free
// group automorphism updated one letter at a time, so the work scales with
// the size of the answer instead of the length of the input.
inline CombedForm comb(const PureWord& input) {
  int n = input.strands();
  CombedForm out;
  out.n = n;
  PureWord rest = input.reduced();
  for (int k = n; k >= 3; --k) {
    FreeAutomorphism phi = FreeAutomorphism::identity(k - 1);
    PureWord beta(n);
    PureWord next(k - 1);
    for (const auto& l : rest.letters()) {
      if (l.j == k) {
        FreeWord img = phi.apply(
            FreeWord{l.sign > 0 ? static_cast<std::int32_t>(l.i) : -static_cast<std::int32_t>(l.i)});
        for (auto x : img) beta.push(x > 0 ? x : -x, k, x > 0 ? 1 : -1);
      } else {
        phi = detail::conjugation_action(l, k - 1).then(phi);
        next.push(l.i, l.j, l.sign);
      }
    }
    out.factors.push_back(beta.reduced());
    rest = std::move(next);
  }
  if (n >= 2) {
    Int e = 0;
    for (const auto& l : rest.letters()) e += l.sign;
    PureWord beta2(n);
    for (Int t = 0; t < (e >= 0 ? e : -e); ++t) beta2.push(1, 2, e >= 0 ? 1 : -1);
    out.factors.push_back(std::move(beta2));
  }
  if (!braid_words_equal(out.expand(), input.expand()))
    throw CombError("combed form failed to multiply back to the input");
  return out;
}

inline CombedForm comb(const BraidWord& input) {
  if (!permutation_of(input).is_identity())
    throw std::invalid_argument("comb requires a pure braid word");
  CombedForm out = comb(pure_letters_of(input));
  if (!braid_words_equal(out.expand(), input))
    throw CombError("combed form failed to multiply back to the input");
  return out;
}

// substitutes the sphere row relation for every a(i,n) letter:
// a(i,n) = (a(i,i+1)...a(i,n-1))^{-1} (a(i,1)...a(i,i-1))^{-1}
inline PureWord eliminate_last_index(const PureWord& w, int n) {
  if (w.strands() != n) throw std::invalid_argument("strand count mismatch");
  if (n < 3) throw std::invalid_argument("eliminate_last_index needs n >= 3");
  PureWord r(n - 1);
  for (const auto& l : w.letters()) {
    if (l.j != n) {
      r.push(l.i, l.j, l.sign);
      continue;
    }
    int i = l.i;
    PureWord sub(n - 1);
    for (int t = n - 1; t >= i + 1; --t) sub.push(i, t, -1);
    for (int t = i - 1; t >= 1; --t) sub.push(t, i, -1);
    r *= (l.sign > 0 ? sub : sub.inverse());
  }
  return r.reduced();
}

// mod-2 exponent over the support {a(1,2), a(1,3), a(2,3)}; vanishes on all sphere
// relators, takes value 1 on the full twist
inline int epsilon_character(const PureWord& w, int n) {
  if (n < 3) throw std::invalid_argument("epsilon_character needs n >= 3");
  Int e = 0;
  for (const auto& l : w.letters())
    if (l.j <= 3) e += l.sign;
  return static_cast<int>(pos_mod(e, 2));
}

// exponent sum of a(1,2): takes value 1 on the full twist of the word's strand count
inline Int center_exponent(const PureWord& w) { return w.exponent_sum(1, 2); }

}  // namespace vass
