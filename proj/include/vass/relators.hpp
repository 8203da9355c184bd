#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "vass/words.hpp"

namespace vass {

enum class GroupPresentation {
  artin,            // disc braid group, crossing generators
  sphere_braid,     // adds the sphere relation
  mcg_sphere,       // adds the full-twist relation as well
  burau_pure,       // pure disc braids, a(i,j) generators
  gvb_sphere_pure,  // pure sphere braids: burau relations plus one row relation per strand
};

inline bool uses_pure_alphabet(GroupPresentation p) {
  return p == GroupPresentation::burau_pure || p == GroupPresentation::gvb_sphere_pure;
}

inline std::string presentation_name(GroupPresentation p) {
  switch (p) {
    case GroupPresentation::artin: return "artin";
    case GroupPresentation::sphere_braid: return "sphere_braid";
    case GroupPresentation::mcg_sphere: return "mcg_sphere";
    case GroupPresentation::burau_pure: return "burau_pure";
    case GroupPresentation::gvb_sphere_pure: return "gvb_sphere_pure";
  }
  throw std::logic_error("unknown presentation");
}

// s1 s2 ... s(n-2) s(n-1)^2 s(n-2) ... s2 s1
inline BraidWord sphere_relation_word(int n) {
  BraidWord w(n);
  for (int t = 1; t <= n - 1; ++t) w.push(t, 1);
  for (int t = n - 1; t >= 1; --t) w.push(t, 1);
  return w;
}

// (s1 ... s(n-1))^n
inline BraidWord full_twist_word(int n) {
  BraidWord w(n);
  for (int r = 0; r < n; ++r)
    for (int t = 1; t <= n - 1; ++t) w.push(t, 1);
  return w;
}

// Each relation LHS = RHS is returned as the single word LHS * RHS^{-1}.
inline std::vector<BraidWord> sigma_relators(int n, GroupPresentation p) {
  if (uses_pure_alphabet(p)) throw std::invalid_argument("presentation uses the pure alphabet");
  std::vector<BraidWord> out;
  // commuting relations s_i s_j = s_j s_i, j > i+1
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) {
      BraidWord w(n);
      w.push(i, 1);
      w.push(j, 1);
      w.push(i, -1);
      w.push(j, -1);
      out.push_back(std::move(w));
    }
  // braid relations s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}
  for (int i = 1; i <= n - 2; ++i) {
    BraidWord w(n);
    w.push(i, 1);
    w.push(i + 1, 1);
    w.push(i, 1);
    w.push(i + 1, -1);
    w.push(i, -1);
    w.push(i + 1, -1);
    out.push_back(std::move(w));
  }
  if (p == GroupPresentation::sphere_braid || p == GroupPresentation::mcg_sphere)
    out.push_back(sphere_relation_word(n));
  if (p == GroupPresentation::mcg_sphere) out.push_back(full_twist_word(n));
  return out;
}

namespace detail {

inline void push_word(PureWord& w, std::initializer_list<std::pair<std::pair<int, int>, int>> ls) {
  for (auto& [ij, s] : ls) w.push(ij.first, ij.second, s);
}

}  // namespace detail

// row relation i on the sphere: a(i,i+1) a(i,i+2) ... a(i,i+n-1), indices mod n
inline PureWord row_relation_word(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("row index out of range");
  PureWord w(n);
  for (int t = 1; t <= n - 1; ++t) {
    int j = (i - 1 + t) % n + 1;
    w.push(i, j, 1);
  }
  return w;
}

inline std::vector<PureWord> pure_relators(int n, GroupPresentation p) {
  if (!uses_pure_alphabet(p)) throw std::invalid_argument("presentation uses the crossing alphabet");
  std::vector<PureWord> out;
  using P = std::pair<int, int>;
  // family 1: a(i,j) a(k,l) = a(k,l) a(i,j) for i<j<k<l and i<k<l<j
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          bool separated = i < j && j < k && k < l;
          bool nested = i < k && k < l && l < j;
          if (!separated && !nested) continue;
          PureWord w(n);
          detail::push_word(w, {{P{i, j}, 1}, {P{k, l}, 1}, {P{i, j}, -1}, {P{k, l}, -1}});
          out.push_back(std::move(w));
        }
  // family 2: a(i,j) a(i,k) a(j,k) = a(i,k) a(j,k) a(i,j) for i<j<k
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        PureWord w(n);
        detail::push_word(w, {{P{i, j}, 1}, {P{i, k}, 1}, {P{j, k}, 1},
                              {P{i, j}, -1}, {P{j, k}, -1}, {P{i, k}, -1}});
        out.push_back(std::move(w));
      }
  // family 3: a(i,k) a(j,k) a(i,j) = a(j,k) a(i,j) a(i,k) for i<j<k
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        PureWord w(n);
        detail::push_word(w, {{P{i, k}, 1}, {P{j, k}, 1}, {P{i, j}, 1},
                              {P{i, k}, -1}, {P{i, j}, -1}, {P{j, k}, -1}});
        out.push_back(std::move(w));
      }
  // family 4: a(i,k) a(j,k) a(j,l) a(j,k)^-1 = a(j,k) a(j,l) a(j,k)^-1 a(i,k) for i<j<k<l
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          PureWord w(n);
          detail::push_word(w, {{P{i, k}, 1}, {P{j, k}, 1}, {P{j, l}, 1}, {P{j, k}, -1},
                                {P{i, k}, -1}, {P{j, k}, 1}, {P{j, l}, -1}, {P{j, k}, -1}});
          out.push_back(std::move(w));
        }
  if (p == GroupPresentation::gvb_sphere_pure)
    for (int i = 1; i <= n; ++i) out.push_back(row_relation_word(n, i));
  return out;
}

}  // namespace vass
