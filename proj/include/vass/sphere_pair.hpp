#pragma once

#include <stdexcept>
#include <utility>

#include "vass/ncpoly.hpp"
#include "vass/reduction.hpp"

namespace vass {

// Element P + Q*x with x central, x^2 = -2x. P and Q are canonical elements of
// one torsion-free quotient; the degree-d coordinates of Q only matter modulo
// 2^(m-d), and the stored representative lives in [0, 2^(m-d)).
struct SpherePair {
  CanonicalElement P;
  CanonicalElement Q;

  bool is_zero() const { return P.is_zero() && Q.is_zero(); }
  friend bool operator==(const SpherePair&, const SpherePair&) = default;
};

class PairAlgebra {
 public:
  PairAlgebra(TableStore& store, AlgebraPresentation pres, int N, int m)
      : q_(store, pres, N, m) {
    if (!q_.torsion_free())
      throw std::invalid_argument("pair model needs a torsion-free scalar quotient");
  }

  const Quotient& scalars() const { return q_; }
  int truncation() const { return q_.truncation(); }

  CanonicalElement normalize_q(CanonicalElement e) const {
    for (int d = 0; d <= q_.truncation(); ++d) {
      Int modulus = pow2(q_.truncation() - d);
      for (auto& c : e.coords[static_cast<std::size_t>(d)]) c = pos_mod(c, modulus);
    }
    return e;
  }

  SpherePair make(CanonicalElement p, CanonicalElement q) const {
    return {std::move(p), normalize_q(std::move(q))};
  }

  SpherePair one() const { return {q_.unit(), q_.zero()}; }
  SpherePair zero() const { return {q_.zero(), q_.zero()}; }
  SpherePair x() const { return {q_.zero(), normalize_q(q_.unit())}; }
  SpherePair one_plus_x() const { return add(one(), x()); }

  SpherePair add(const SpherePair& a, const SpherePair& b) const {
    return {q_.add(a.P, b.P), normalize_q(q_.add(a.Q, b.Q))};
  }
  SpherePair sub(const SpherePair& a, const SpherePair& b) const {
    return {q_.sub(a.P, b.P), normalize_q(q_.sub(a.Q, b.Q))};
  }
  SpherePair scale(Int c, const SpherePair& a) const {
    return {q_.scale(c, a.P), normalize_q(q_.scale(c, a.Q))};
  }

  // (P1 + Q1 x)(P2 + Q2 x) = P1 P2 + (P1 Q2 + Q1 P2 - 2 Q1 Q2) x
  SpherePair mul(const SpherePair& a, const SpherePair& b) const {
    CanonicalElement p = q_.mul(a.P, b.P);
    CanonicalElement cross = q_.add(q_.mul(a.P, b.Q), q_.mul(a.Q, b.P));
    CanonicalElement qq = q_.scale(-2, q_.mul(a.Q, b.Q));
    return {std::move(p), normalize_q(q_.add(cross, qq))};
  }

  // index action x_{i,j} -> x_{p(i),p(j)}; p permutes one more point than the
  // index bound, and images touching that point reroute through the row rule
  CanonicalElement perm_act(const Permutation& p, const CanonicalElement& e) const {
    NCPoly image = substitute_generators(q_.section(e), q_.index_bound(),
                                         permutation_rules(p, q_.index_bound()));
    return q_.reduce(image);
  }

  SpherePair perm_act(const Permutation& p, const SpherePair& a) const {
    return {perm_act(p, a.P), normalize_q(perm_act(p, a.Q))};
  }

  // min over nonzero coordinates: degree d for the P-part, d + 1 + v2(coeff)
  // for the Q-part; INF_DEGREE when zero
  int filtration_degree(const SpherePair& a) const {
    int best = a.P.filtration();
    for (int d = 0; d <= q_.truncation(); ++d)
      for (Int c : a.Q.coords[static_cast<std::size_t>(d)])
        if (c != 0) best = std::min(best, d + 1 + v2(c));
    return best;
  }

  // minimal 2-power annihilating a pure-torsion element (P = 0); 0 if P != 0
  Int annihilator(const SpherePair& a) const {
    if (!a.P.is_zero()) return 0;
    int t = 0;
    for (int d = 0; d <= q_.truncation(); ++d)
      for (Int c : a.Q.coords[static_cast<std::size_t>(d)])
        if (c != 0) t = std::max(t, q_.truncation() - d - v2(c));
    return pow2(t);
  }

  // reduction mod an odd prime kills the dyadic Q-part entirely
  bool vanishes_mod(const SpherePair& a, Int odd) const {
    for (const auto& comp : a.P.coords)
      for (Int c : comp)
        if (pos_mod(c, odd) != 0) return false;
    return true;
  }

 private:
  Quotient q_;
};

}  // namespace vass
