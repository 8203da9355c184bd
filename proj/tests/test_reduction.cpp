#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "vass/ncpoly.hpp"
#include "vass/presentations.hpp"
#include "vass/reduction.hpp"

using namespace vass;

namespace {

NCPoly random_poly(SplitMix64& rng, int N, int m) {
  NCPoly p(N, m);
  for (int d = 0; d <= m; ++d)
    for (auto& c : p.component(d)) c = rng.range(-4, 4);
  return p;
}

}  // namespace

TEST_CASE("relator counts per presentation") {
  CHECK(four_t_relators(3).size() == 2);    // one triple, two relators
  CHECK(four_t_relators(4).size() == 11);   // 3 disjoint pairs + 4 triples * 2
  CHECK(algebra_relators(AlgebraPresentation::ihara, 4).size() == 15);
  CHECK(algebra_relators(AlgebraPresentation::pm_reduced, 3).size() == 3);
  CHECK(algebra_relators(AlgebraPresentation::sphere_reduced, 3).size() == 3);
  CHECK(presentation_from_id("kohno_4T") == AlgebraPresentation::kohno_4T);
  CHECK(presentation_id(AlgebraPresentation::sphere_reduced) == "sphere_reduced");
  CHECK_THROWS_AS(presentation_from_id("nope"), std::invalid_argument);
}

TEST_CASE("degree-one table of the reduced pure algebra") {
  ReductionTable t = build_reduction_table(AlgebraPresentation::pm_reduced, 3, 1);
  CHECK(t.monomials == 3);
  CHECK(t.basis == std::vector<std::uint64_t>{1, 2});  // x13, x23 survive
  CHECK(t.moduli == std::vector<Int>{0, 0});
  CHECK(t.smith.empty());
  CHECK(t.free_rank() == 2);
  // x12 = -x13 - x23 after the central relator
  CHECK(t.mono_coords[0] == std::vector<Int>{-1, -1});
  CHECK(t.mono_coords[1] == std::vector<Int>{1, 0});
  CHECK(t.mono_coords[2] == std::vector<Int>{0, 1});
}

TEST_CASE("degree-one table of the sphere algebra keeps a two-torsion class") {
  ReductionTable t = build_reduction_table(AlgebraPresentation::sphere_reduced, 3, 1);
  CHECK(t.basis == std::vector<std::uint64_t>{0, 1, 2});
  CHECK(t.moduli == std::vector<Int>{2, 0, 0});
  CHECK(t.smith == std::vector<Int>{2});
  CHECK(t.free_rank() == 2);

  // z is nonzero but 2z reduces to zero
  std::vector<Int> z{1, 1, 1};
  t.reduce_vector(z);
  CHECK(t.coords_of(z) == std::vector<Int>{1, 1, 1});
  std::vector<Int> zz{2, 2, 2};
  t.reduce_vector(zz);
  CHECK(t.coords_of(zz) == std::vector<Int>{0, 0, 0});
}

TEST_CASE("sphere torsion class appears for every strand count") {
  TableStore store{std::string()};
  for (int N = 3; N <= 5; ++N) {
    GradedRank r = graded_ranks(store, AlgebraPresentation::sphere_reduced, N, 1);
    CHECK(r.free_rank == static_cast<Int>(generator_count(N)) - 1);
    CHECK(r.torsion == std::vector<Int>{2});
  }
}

TEST_CASE("row-sum presentation matches the sphere presentation one index down") {
  TableStore store{std::string()};
  for (int n = 3; n <= 6; ++n) {
    GradedRank a = graded_ranks(store, AlgebraPresentation::ihara, n, 1);
    GradedRank b = graded_ranks(store, AlgebraPresentation::sphere_reduced, n - 1, 1);
    CHECK(a == b);
  }
  GradedRank i3 = graded_ranks(store, AlgebraPresentation::ihara, 3, 1);
  CHECK(i3.free_rank == 0);
  CHECK(i3.torsion == std::vector<Int>{2});
}

TEST_CASE("reduced pure algebra has rank 2^d and no torsion") {
  TableStore store{std::string()};
  for (int d = 0; d <= 4; ++d) {
    GradedRank r = graded_ranks(store, AlgebraPresentation::pm_reduced, 3, d);
    CHECK(r.free_rank == (Int(1) << d));
    CHECK(r.torsion.empty());
  }
}

TEST_CASE("relators reduce to zero in their own quotient") {
  TableStore store{std::string()};
  for (auto pres : {AlgebraPresentation::kohno_4T, AlgebraPresentation::ihara,
                    AlgebraPresentation::pm_reduced, AlgebraPresentation::sphere_reduced}) {
    for (int N = 2; N <= 4; ++N) {
      Quotient q(store, pres, N, 2);
      for (const auto& r : algebra_relators(pres, N)) CHECK(q.reduce(r).is_zero());
    }
  }
}

TEST_CASE("reduce then section is idempotent even with torsion") {
  TableStore store{std::string()};
  Quotient q(store, AlgebraPresentation::sphere_reduced, 3, 2);
  SplitMix64 rng(211);
  for (int t = 0; t < 30; ++t) {
    NCPoly p = random_poly(rng, 3, 2);
    CanonicalElement e = q.reduce(p);
    CHECK(q.reduce(q.section(e)) == e);
  }
}

TEST_CASE("reduction is linear on a torsion-free quotient") {
  TableStore store{std::string()};
  Quotient q(store, AlgebraPresentation::pm_reduced, 3, 2);
  CHECK(q.torsion_free());
  SplitMix64 rng(223);
  for (int t = 0; t < 30; ++t) {
    NCPoly a = random_poly(rng, 3, 2);
    NCPoly b = random_poly(rng, 3, 2);
    CHECK(q.reduce(a + b) == q.add(q.reduce(a), q.reduce(b)));
  }
}

TEST_CASE("quotient product ignores relator perturbations") {
  TableStore store{std::string()};
  SplitMix64 rng(227);
  for (auto pres : {AlgebraPresentation::pm_reduced, AlgebraPresentation::sphere_reduced}) {
    Quotient q(store, pres, 3, 2);
    auto relators = algebra_relators(pres, 3);
    for (int t = 0; t < 15; ++t) {
      NCPoly a = random_poly(rng, 3, 2);
      NCPoly b = random_poly(rng, 3, 2);
      const NCPoly& r = relators[static_cast<std::size_t>(rng.below(relators.size()))];
      CHECK(q.mul(q.reduce(a), q.reduce(b)) == q.reduce(nc_mul(a, b + r)));
      CHECK(q.reduce(nc_mul(nc_mul(a, r), b)).is_zero());
    }
  }
}

TEST_CASE("unit and zero elements behave") {
  TableStore store{std::string()};
  Quotient q(store, AlgebraPresentation::sphere_reduced, 3, 2);
  CHECK(q.zero().is_zero());
  CHECK_FALSE(q.unit().is_zero());
  CHECK(q.unit().filtration() == 0);
  CHECK(q.zero().filtration() == INF_DEGREE);
  CHECK(q.mul(q.unit(), q.unit()) == q.unit());
  CHECK(q.sub(q.unit(), q.unit()) == q.zero());
}

TEST_CASE("cache text round-trips byte for byte") {
  ReductionTable t = build_reduction_table(AlgebraPresentation::sphere_reduced, 3, 2);
  std::string text = serialize_table(t);
  ReductionTable u = parse_table(text);
  CHECK(u.pres == t.pres);
  CHECK(u.N == t.N);
  CHECK(u.d == t.d);
  CHECK(u.basis == t.basis);
  CHECK(u.moduli == t.moduli);
  CHECK(u.smith == t.smith);
  CHECK(u.pivots == t.pivots);
  CHECK(u.rows == t.rows);
  CHECK(u.mono_coords == t.mono_coords);
  CHECK(serialize_table(u) == text);
}

TEST_CASE("cache text rejects tampering") {
  ReductionTable t = build_reduction_table(AlgebraPresentation::pm_reduced, 3, 1);
  std::string text = serialize_table(t);

  std::string flipped = text;
  std::size_t at = flipped.find("1,2");
  REQUIRE(at != std::string::npos);
  flipped[at] = '9';
  CHECK_THROWS_AS(parse_table(flipped), CacheError);

  // wrong version line with a recomputed checksum
  std::string body = text.substr(0, text.rfind("checksum="));
  body.replace(body.find("VASS-CACHE-1"), 12, "VASS-CACHE-9");
  std::string versioned = body + "checksum=" + std::to_string(fnv1a(body.data(), body.size())) + "\n";
  CHECK_THROWS_WITH(parse_table(versioned), Catch::Matchers::ContainsSubstring("version"));

  CHECK_THROWS_AS(parse_table("garbage"), CacheError);
}

TEST_CASE("table store writes and reloads cache files") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("vass-test-cache-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  {
    TableStore store{dir.string()};
    auto t = store.get(AlgebraPresentation::pm_reduced, 3, 1);
    CHECK(t->free_rank() == 2);
    CHECK(fs::exists(store.file_path(AlgebraPresentation::pm_reduced, 3, 1)));
  }
  {
    TableStore cold{dir.string(), true};  // no_build: must load from disk
    auto t = cold.get(AlgebraPresentation::pm_reduced, 3, 1);
    CHECK(t->basis == std::vector<std::uint64_t>{1, 2});
    CHECK_THROWS_AS(cold.get(AlgebraPresentation::pm_reduced, 3, 2), TableUnavailable);
  }
  {
    TableStore none{std::string(), true};
    CHECK_THROWS_AS(none.get(AlgebraPresentation::pm_reduced, 3, 1), TableUnavailable);
  }
  fs::remove_all(dir);
}

TEST_CASE("two independent builds serialize identically") {
  ReductionTable a = build_reduction_table(AlgebraPresentation::ihara, 4, 2);
  ReductionTable b = build_reduction_table(AlgebraPresentation::ihara, 4, 2);
  CHECK(serialize_table(a) == serialize_table(b));
}

TEST_CASE("degree reduction matches the per-monomial coordinate table") {
  TableStore store{std::string()};
  Quotient q(store, AlgebraPresentation::sphere_reduced, 4, 2);
  const ReductionTable& t1 = q.table(1);
  GeneratorSet g = GeneratorSet::upto(4);
  for (std::size_t s = 0; s < g.count(); ++s) {
    auto [i, j] = g.pairs[s];
    CanonicalElement e = q.reduce(NCPoly::generator(4, 2, i, j));
    CHECK(e.coords[1] == t1.mono_coords[s]);
  }
}

TEST_CASE("classical quotient is torsion free through degree three") {
  // the pair comparison path relies on this when both values live over it
  TableStore store{std::string()};
  for (int N = 2; N <= 4; ++N) {
    Quotient q(store, AlgebraPresentation::kohno_4T, N, 3);
    CHECK(q.torsion_free());
  }
}
