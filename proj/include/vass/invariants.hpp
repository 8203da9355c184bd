#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vass/combing.hpp"
#include "vass/ncpoly.hpp"
#include "vass/presentations.hpp"
#include "vass/reduction.hpp"
#include "vass/relators.hpp"
#include "vass/sphere_pair.hpp"
#include "vass/words.hpp"

namespace vass {

enum class Group { pn, pmn, ps2, bs2, mn };

inline std::string group_id(Group g) {
  switch (g) {
    case Group::pn: return "pn";
    case Group::pmn: return "pmn";
    case Group::ps2: return "ps2";
    case Group::bs2: return "bs2";
    case Group::mn: return "mn";
  }
  throw std::logic_error("unknown group");
}

inline Group group_from_id(const std::string& id) {
  if (id == "pn") return Group::pn;
  if (id == "pmn") return Group::pmn;
  if (id == "ps2") return Group::ps2;
  if (id == "bs2") return Group::bs2;
  if (id == "mn") return Group::mn;
  throw std::invalid_argument("unknown group id '" + id + "'");
}

inline bool group_uses_pure_alphabet(Group g) {
  return g == Group::pn || g == Group::pmn || g == Group::ps2;
}

// classical pure braids: comb, expand every factor, reduce mod the 4T span
inline CanonicalElement mu(const BraidWord& q, int n, int m, TableStore& store) {
  if (q.strands() != n) throw std::invalid_argument("word is on the wrong strand count");
  if (!permutation_of(q).is_identity()) throw std::invalid_argument("mu needs a pure braid");
  CombedForm c = comb(q);
  NCPoly p = magnus_expand(c.flatten(), n, m);
  return Quotient(store, AlgebraPresentation::kohno_4T, n, m).reduce(p);
}

// mapping classes fixing the punctures: u over indices <= n-1 represents an
// element of the quotient of the (n-1)-strand pure braid group by its center;
// the center exponent is cancelled before expanding
inline CanonicalElement kappa(const PureWord& u, int n, int m, TableStore& store) {
  if (u.strands() != n - 1) throw std::invalid_argument("word is on the wrong strand count");
  Int k = center_exponent(u);
  PureWord lift = u * delta_sq_pure_word(n - 1).pow(static_cast<int>(-k));
  CombedForm c = comb(lift);
  NCPoly p = magnus_expand(c.flatten(), n - 1, m);
  return Quotient(store, AlgebraPresentation::pm_reduced, n - 1, m).reduce(p);
}

// pure sphere braids: split off the last index and the parity of the central
// class; the value is kappa of the reduced word times (1+x)^parity
inline SpherePair lambda(const BraidWord& q, int n, int m, TableStore& store) {
  if (n < 3) throw std::invalid_argument("sphere pipeline needs n >= 3");
  if (q.strands() != n) throw std::invalid_argument("word is on the wrong strand count");
  if (!permutation_of(q).is_identity()) throw std::invalid_argument("lambda needs a pure braid");
  CombedForm c = comb(q);
  PureWord flat = c.flatten();
  int eps = epsilon_character(flat, n);
  PureWord bar = eliminate_last_index(flat, n);
  CanonicalElement p = kappa(bar, n, m, store);
  PairAlgebra alg(store, AlgebraPresentation::pm_reduced, n - 1, m);
  SpherePair base{std::move(p), alg.scalars().zero()};
  return eps == 0 ? base : alg.mul(base, alg.one_plus_x());
}

struct InvariantValue {
  Group group{};
  int n = 0;
  int m = 0;
  Permutation perm{1};
  SpherePair value;

  friend bool operator==(const InvariantValue&, const InvariantValue&) = default;
};

// full sphere braid group: the value of the pure part paired with the strand
// permutation
inline InvariantValue K(const BraidWord& b, int n, int m, TableStore& store) {
  if (b.strands() != n) throw std::invalid_argument("word is on the wrong strand count");
  auto [q, p] = pure_part(b);
  return {Group::bs2, n, m, p, lambda(q, n, m, store)};
}

// sphere mapping class group: same pipeline, but the torsion class dies in the
// quotient so only the P-part is kept
inline InvariantValue K_M(const BraidWord& b, int n, int m, TableStore& store) {
  if (b.strands() != n) throw std::invalid_argument("word is on the wrong strand count");
  auto [q, p] = pure_part(b);
  SpherePair pair = lambda(q, n, m, store);
  Quotient scalars(store, AlgebraPresentation::pm_reduced, n - 1, m);
  return {Group::mn, n, m, p, SpherePair{pair.P, scalars.zero()}};
}

inline InvariantValue evaluate_value(Group g, const BraidWord& b, int n, int m,
                                     TableStore& store) {
  switch (g) {
    case Group::pn: {
      CanonicalElement p = mu(b, n, m, store);
      Quotient q(store, AlgebraPresentation::kohno_4T, n, m);
      return {g, n, m, Permutation(n), SpherePair{std::move(p), q.zero()}};
    }
    case Group::pmn: {
      throw std::logic_error("pmn values are evaluated from pure words");
    }
    case Group::ps2: {
      return {g, n, m, Permutation(n), lambda(b, n, m, store)};
    }
    case Group::bs2: return K(b, n, m, store);
    case Group::mn: return K_M(b, n, m, store);
  }
  throw std::logic_error("unknown group");
}

inline InvariantValue evaluate_word(Group g, const std::string& word, int n, int m,
                                    TableStore& store) {
  if (g == Group::pmn) {
    PureWord u = parse_pure_word(word, n - 1);
    CanonicalElement p = kappa(u, n, m, store);
    Quotient q(store, AlgebraPresentation::pm_reduced, n - 1, m);
    return {g, n, m, Permutation(n - 1), SpherePair{std::move(p), q.zero()}};
  }
  if (group_uses_pure_alphabet(g)) {
    PureWord u = parse_pure_word(word, n);
    return evaluate_value(g, u.expand(), n, m, store);
  }
  return evaluate_value(g, parse_braid_word(word, n), n, m, store);
}

struct CompareReport {
  bool permutations_equal = false;
  bool equal = false;
  int filtration = 0;  // 0 on permutation mismatch, INF_DEGREE when equal
  bool torsion_only = false;
  Int annihilator = 0;  // minimal annihilating 2-power when torsion_only
  SpherePair diff;

  friend bool operator==(const CompareReport&, const CompareReport&) = default;
};

inline CompareReport compare_values(const InvariantValue& a, const InvariantValue& b,
                                    TableStore& store) {
  if (a.group != b.group || a.n != b.n || a.m != b.m)
    throw std::invalid_argument("comparing values with mismatched parameters");
  PairAlgebra alg(store, a.value.P.pres, a.value.P.N, a.value.P.m);
  CompareReport r;
  r.permutations_equal = a.perm == b.perm;
  r.diff = alg.sub(a.value, b.value);
  r.equal = r.permutations_equal && r.diff.is_zero();
  r.filtration = r.permutations_equal ? alg.filtration_degree(r.diff) : 0;
  r.torsion_only = r.permutations_equal && r.diff.P.is_zero();
  r.annihilator = r.torsion_only ? alg.annihilator(r.diff) : 0;
  return r;
}

struct EisermannPair {
  BraidWord first;
  BraidWord second;
};

// the trivial braid and the full twist: equal permutations, distinguished only
// by the dyadic torsion class
inline EisermannPair eisermann_pair(int n) {
  if (n < 3) throw std::invalid_argument("the pair needs n >= 3");
  BraidWord tau = full_twist_word(n);
  if (!permutation_of(tau).is_identity()) throw std::logic_error("full twist is not pure");
  return {BraidWord(n), std::move(tau)};
}

// direct two-factor recipe for five punctures: expand a word over a_{1,k} and a
// word over a_{2,k} separately and multiply, skipping the combing step
inline CanonicalElement kappa_direct_n5(const PureWord& f3, const PureWord& f2, int m,
                                        TableStore& store) {
  if (f3.strands() != 4 || f2.strands() != 4)
    throw std::invalid_argument("factors live on four strands");
  for (const auto& l : f3.letters())
    if (l.i != 1) throw std::invalid_argument("first factor uses letters a1,k only");
  for (const auto& l : f2.letters())
    if (l.i != 2) throw std::invalid_argument("second factor uses letters a2,k only");
  NCPoly p = nc_mul(magnus_expand(f3, 4, m), magnus_expand(f2, 4, m));
  return Quotient(store, AlgebraPresentation::pm_reduced, 4, m).reduce(p);
}

// formal integer combination of braid words; x<i> tokens denote singular
// crossings and expand to (s<i> - s<i>^-1) during parsing
struct GroupRingElement {
  int n = 2;
  std::vector<std::pair<Int, BraidWord>> terms;
};

inline GroupRingElement parse_combination(const std::string& text, int n) {
  GroupRingElement out;
  out.n = n;
  out.terms.emplace_back(1, BraidWord(n));
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok[0] == 'x') {
      int i = std::stoi(tok.substr(1));
      if (i < 1 || i >= n) throw std::invalid_argument("crossing index out of range");
      std::vector<std::pair<Int, BraidWord>> next;
      next.reserve(out.terms.size() * 2);
      for (const auto& [c, w] : out.terms) {
        BraidWord plus = w, minus = w;
        plus.push(i, 1);
        minus.push(i, -1);
        next.emplace_back(c, std::move(plus));
        next.emplace_back(checked_neg(c), std::move(minus));
      }
      out.terms = std::move(next);
    } else {
      BraidWord letter = parse_braid_word(tok, n);
      for (auto& [c, w] : out.terms) w = w * letter;
    }
  }
  return out;
}

// linear extension of the invariant: values are grouped by permutation and the
// pair parts summed within each class
struct InvariantCombination {
  Group group{};
  int n = 0;
  int m = 0;
  std::vector<std::pair<Permutation, SpherePair>> parts;  // sorted by permutation

  bool is_zero() const {
    for (const auto& [p, v] : parts)
      if (!v.is_zero()) return false;
    return true;
  }
};

inline InvariantCombination invariant_of_combination(const GroupRingElement& c, int n, int m,
                                                     Group g, TableStore& store) {
  if (g != Group::bs2 && g != Group::mn)
    throw std::invalid_argument("combinations are evaluated for the sphere braid and mapping class groups");
  PairAlgebra alg(store, AlgebraPresentation::pm_reduced, n - 1, m);
  std::map<Permutation, SpherePair> acc;
  for (const auto& [coeff, word] : c.terms) {
    InvariantValue v = g == Group::bs2 ? K(word, n, m, store) : K_M(word, n, m, store);
    SpherePair scaled = alg.scale(coeff, v.value);
    auto [it, fresh] = acc.emplace(v.perm, scaled);
    if (!fresh) it->second = alg.add(it->second, scaled);
  }
  InvariantCombination out;
  out.group = g;
  out.n = n;
  out.m = m;
  out.parts.assign(acc.begin(), acc.end());
  return out;
}

}  // namespace vass
