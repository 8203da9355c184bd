#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "vass/ncpoly.hpp"

namespace vass {

enum class AlgebraPresentation { kohno_4T, ihara, pm_reduced, sphere_reduced };

inline std::string presentation_id(AlgebraPresentation p) {
  switch (p) {
    case AlgebraPresentation::kohno_4T: return "kohno_4T";
    case AlgebraPresentation::ihara: return "ihara";
    case AlgebraPresentation::pm_reduced: return "pm_reduced";
    case AlgebraPresentation::sphere_reduced: return "sphere_reduced";
  }
  throw std::logic_error("unknown presentation");
}

inline AlgebraPresentation presentation_from_id(const std::string& id) {
  if (id == "kohno_4T") return AlgebraPresentation::kohno_4T;
  if (id == "ihara") return AlgebraPresentation::ihara;
  if (id == "pm_reduced") return AlgebraPresentation::pm_reduced;
  if (id == "sphere_reduced") return AlgebraPresentation::sphere_reduced;
  throw std::invalid_argument("unknown presentation id '" + id + "'");
}

namespace detail {

// [x_a, x_b] as a degree-2 polynomial
inline NCPoly commutator(int N, std::size_t a, std::size_t b) {
  NCPoly p(N, 2);
  std::size_t g = generator_count(N);
  p.add_coeff(2, a * g + b, 1);
  p.add_coeff(2, b * g + a, -1);
  return p;
}

}  // namespace detail

// the infinitesimal braid relations: disjoint pairs commute, and each triple
// i<j<k contributes [x_ij, x_ik + x_jk] and [x_ik, x_ij + x_jk]
inline std::vector<NCPoly> four_t_relators(int N) {
  GeneratorSet g = GeneratorSet::upto(N);
  std::vector<NCPoly> rels;
  for (std::size_t a = 0; a < g.count(); ++a)
    for (std::size_t b = a + 1; b < g.count(); ++b) {
      auto [i, j] = g.pairs[a];
      auto [s, t] = g.pairs[b];
      if (i != s && i != t && j != s && j != t) rels.push_back(detail::commutator(N, a, b));
    }
  for (int i = 1; i <= N - 2; ++i)
    for (int j = i + 1; j <= N - 1; ++j)
      for (int k = j + 1; k <= N; ++k) {
        std::size_t ij = g.index_of(i, j), ik = g.index_of(i, k), jk = g.index_of(j, k);
        rels.push_back(detail::commutator(N, ij, ik) + detail::commutator(N, ij, jk));
        rels.push_back(detail::commutator(N, ik, ij) + detail::commutator(N, ik, jk));
      }
  return rels;
}

// z = sum of all generators
inline NCPoly central_sum(int N, Int scalar) {
  NCPoly p(N, 2);
  std::size_t g = generator_count(N);
  for (std::size_t t = 0; t < g; ++t) p.add_coeff(1, t, scalar);
  return p;
}

inline std::vector<NCPoly> algebra_relators(AlgebraPresentation pres, int N) {
  std::vector<NCPoly> rels = four_t_relators(N);
  switch (pres) {
    case AlgebraPresentation::kohno_4T:
      break;
    case AlgebraPresentation::ihara:
      for (int i = 1; i <= N; ++i) {
        NCPoly row(N, 2);
        GeneratorSet g = GeneratorSet::upto(N);
        for (int j = 1; j <= N; ++j)
          if (j != i) row.add_coeff(1, g.index_of(std::min(i, j), std::max(i, j)), 1);
        rels.push_back(std::move(row));
      }
      break;
    case AlgebraPresentation::pm_reduced:
      rels.push_back(central_sum(N, 1));
      break;
    case AlgebraPresentation::sphere_reduced:
      rels.push_back(central_sum(N, 2));
      break;
  }
  return rels;
}

}  // namespace vass
