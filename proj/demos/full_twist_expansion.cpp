// Measures the classical expansion of the full twist against the guess
// 1 + sum of all degree-one generators. The degree-one part always matches
// (the combed full twist uses every generator exactly once); whatever happens
// in higher degrees is printed, not asserted.

#include <iostream>

#include "vass/cli.hpp"

int main() {
  using namespace vass;
  TableStore store{std::string()};

  for (int n : {3, 4}) {
    for (int m : {2, 3}) {
      CanonicalElement got = mu(delta_sq_word(n), n, m, store);

      NCPoly poly = NCPoly::unit(n, m);
      GeneratorSet g = GeneratorSet::upto(n);
      for (auto [i, j] : g.pairs) poly.component(1)[g.index_of(i, j)] += 1;
      CanonicalElement guess = Quotient(store, AlgebraPresentation::kohno_4T, n, m).reduce(poly);

      std::cout << "n=" << n << " m=" << m << "\n";
      for (int d = 0; d <= m; ++d) {
        bool same = got.coords[static_cast<std::size_t>(d)] ==
                    guess.coords[static_cast<std::size_t>(d)];
        std::cout << "  degree " << d << ": " << (same ? "matches the guess" : "differs") << "\n";
      }
      CanonicalElement diff = got;
      for (std::size_t d = 0; d < diff.coords.size(); ++d)
        for (std::size_t k = 0; k < diff.coords[d].size(); ++k)
          diff.coords[d][k] -= guess.coords[d][k];
      if (!diff.is_zero()) detail::print_coords(std::cout, "  difference", diff, false, store);
    }
  }
  return 0;
}
