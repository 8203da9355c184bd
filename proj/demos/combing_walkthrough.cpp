// Combs a short pure braid and prints the factors.

#include <cstdio>

#include "vass/combing.hpp"
#include "vass/words.hpp"

int main() {
  using namespace vass;
  BraidWord w = parse_pure_word("a1,3 a2,4 a1,2^-1", 4).expand();
  std::printf("input:  %s\n", w.str().c_str());
  CombedForm c = comb(w);
  for (std::size_t t = 0; t < c.factors.size(); ++t) {
    const PureWord& f = c.factors[t];
    std::printf("beta_%zu: %s\n", c.factors.size() + 1 - t, f.empty() ? "(empty)" : f.str().c_str());
  }
  return 0;
}
