#include <catch2/catch_amalgamated.hpp>

#include "vass/artin.hpp"
#include "vass/relators.hpp"
#include "vass/words.hpp"

using namespace vass;

TEST_CASE("generator rules") {
  FreeAutomorphism f = artin_automorphism(parse_braid_word("s1", 3));
  CHECK(f.image(1) == FreeWord{1, 2, -1});
  CHECK(f.image(2) == FreeWord{1});
  CHECK(f.image(3) == FreeWord{3});

  FreeAutomorphism g = artin_automorphism(parse_braid_word("s1^-1", 3));
  CHECK(g.image(1) == FreeWord{2});
  CHECK(g.image(2) == FreeWord{-2, 1, 2});
}

TEST_CASE("double crossing conjugates the far generator") {
  FreeAutomorphism f = artin_automorphism(parse_braid_word("s2 s2", 3));
  CHECK(f.image(3) == FreeWord{2, 3, -2});
  CHECK(f.image(1) == FreeWord{1});
}

TEST_CASE("composition is left to right and inverses cancel") {
  SplitMix64 rng(23);
  for (int t = 0; t < 40; ++t) {
    int n = rng.range(2, 5);
    BraidWord u(n), v(n);
    for (int s = 0; s < 10; ++s) u.push(rng.range(1, n - 1), rng.coin() ? 1 : -1);
    for (int s = 0; s < 10; ++s) v.push(rng.range(1, n - 1), rng.coin() ? 1 : -1);
    CHECK(artin_automorphism(u * v) == artin_automorphism(u).then(artin_automorphism(v)));
    CHECK(artin_automorphism(u * u.inverse()).is_identity());
  }
}

TEST_CASE("the action preserves the boundary product x1...xn") {
  SplitMix64 rng(29);
  for (int t = 0; t < 40; ++t) {
    int n = rng.range(2, 6);
    BraidWord w(n);
    for (int s = 0; s < 14; ++s) w.push(rng.range(1, n - 1), rng.coin() ? 1 : -1);
    FreeAutomorphism f = artin_automorphism(w);
    FreeWord prod;
    for (int g = 1; g <= n; ++g) prod.push_back(g);
    CHECK(f.apply(prod) == prod);
  }
}

TEST_CASE("equality oracle separates and identifies") {
  // defining relation
  CHECK(braid_words_equal(parse_braid_word("s1 s2 s1", 3), parse_braid_word("s2 s1 s2", 3)));
  CHECK(braid_words_equal(parse_braid_word("s1 s3", 4), parse_braid_word("s3 s1", 4)));
  CHECK_FALSE(braid_words_equal(parse_braid_word("s1", 3), parse_braid_word("s2", 3)));
  CHECK_FALSE(braid_words_equal(parse_braid_word("s1 s1", 3), BraidWord(3)));

  // random relator insertions are invisible to the oracle
  SplitMix64 rng(31);
  auto rels = sigma_relators(4, GroupPresentation::artin);
  for (int t = 0; t < 30; ++t) {
    BraidWord w(4);
    for (int s = 0; s < 10; ++s) w.push(rng.range(1, 3), rng.coin() ? 1 : -1);
    const BraidWord& r = rels[rng.below(rels.size())];
    auto cut = rng.below(w.size() + 1);
    BraidWord left(4, {w.letters().begin(), w.letters().begin() + static_cast<long>(cut)});
    BraidWord right(4, {w.letters().begin() + static_cast<long>(cut), w.letters().end()});
    CHECK(braid_words_equal(left * r * right, w));
  }

  // the sphere relation is NOT trivial for disc braids
  CHECK_FALSE(braid_words_equal(sphere_relation_word(4), BraidWord(4)));
}

TEST_CASE("delta squared is central for the Artin action") {
  for (int n = 3; n <= 5; ++n) {
    BraidWord dsq = delta_sq_word(n);
    CHECK(braid_words_equal(dsq, delta_sq_pure_word(n).expand()));
    CHECK(braid_words_equal(dsq, full_twist_word(n)));
    BraidWord g(n);
    g.push(1, 1);
    CHECK(braid_words_equal(dsq * g, g * dsq));
  }
}
