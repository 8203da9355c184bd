// The trivial braid and the full twist share a permutation; on the sphere the
// invariant separates them by a pure 2-power torsion class whose order grows
// with the truncation depth, and the class dies modulo any odd number.

#include <iostream>

#include "vass/cli.hpp"

int main() {
  using namespace vass;
  TableStore store{std::string()};

  for (int n : {3, 4, 5}) {
    for (int m : {1, 2, 3}) {
      auto [trivial, twist] = eisermann_pair(n);
      InvariantValue a = K(trivial, n, m, store);
      InvariantValue b = K(twist, n, m, store);
      CompareReport r = compare_values(a, b, store);
      std::cout << "n=" << n << " m=" << m << "  equal=" << (r.equal ? "yes" : "no")
                << "  torsion only=" << (r.torsion_only ? "yes" : "no")
                << "  annihilator=" << r.annihilator << "\n";
    }
  }

  std::cout << "\ndifference of the two values at n=4, m=3:\n";
  auto [trivial, twist] = eisermann_pair(4);
  CompareReport r =
      compare_values(K(trivial, 4, 3, store), K(twist, 4, 3, store), store);
  detail::print_coords(std::cout, "P", r.diff.P, false, store);
  detail::print_coords(std::cout, "Q", r.diff.Q, true, store);
  return 0;
}
