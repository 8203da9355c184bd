// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>
#include <unistd.h>

#include "vass.hpp"
#include "vass/cli.hpp"

using namespace vass;

namespace {

TableStore g_store{std::string()};

// --- 1 -----------------------------------------------------------------

std::optional<std::string> criterion_relator_invariance() {
  auto start = std::chrono::steady_clock::now();
  SplitMix64 rng(1001);
  for (int t = 0; t < 200; ++t) {
    int n = 3 + t % 3;
    int m = 1 + (t / 3) % 3;
    BraidWord w = random_braid_word(rng, n, static_cast<int>(rng.below(21)));
    auto rels = sigma_relators(n, GroupPresentation::sphere_braid);
    BraidWord r = rels[rng.below(rels.size())];
    if (rng.coin()) r = r.inverse();
    BraidWord spliced = splice_braid(w, rng.below(w.size() + 1), r);
    InvariantValue a = K(w, n, m, g_store);
    InvariantValue b = K(spliced, n, m, g_store);
    if (!(a == b)) {
      std::ostringstream os;
      os << "trial " << t << " (n=" << n << ", m=" << m << "): K moved under relator insertion";
      return os.str();
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > 300.0) return "exceeded the five-minute budget: " + std::to_string(secs) + "s";
  return std::nullopt;
}

// --- 2 -----------------------------------------------------------------

std::optional<std::string> criterion_torsion_pair() {
  for (int n = 3; n <= 5; ++n) {
    for (int m = 1; m <= 3; ++m) {
      EisermannPair pair = eisermann_pair(n);
      InvariantValue a = K(pair.first, n, m, g_store);
      InvariantValue b = K(pair.second, n, m, g_store);
      CompareReport rep = compare_values(a, b, g_store);
      std::ostringstream tag;
      tag << "(n=" << n << ", m=" << m << ") ";
      if (rep.equal) return tag.str() + "pair not distinguished";
      if (!rep.diff.P.is_zero()) return tag.str() + "difference has a free part";
      PairAlgebra alg(g_store, AlgebraPresentation::pm_reduced, n - 1, m);
      SpherePair want = alg.scale(-1, alg.x());
      if (!(rep.diff == want)) return tag.str() + "difference is not minus the unit coordinate";
      if (rep.annihilator != pow2(m)) return tag.str() + "annihilator is not 2^m";
      if (!alg.scale(pow2(m), rep.diff).is_zero())
        return tag.str() + "2^m does not annihilate the difference";
      if (alg.scale(pow2(m - 1), rep.diff).is_zero())
        return tag.str() + "order divides 2^(m-1): not exactly 2^m";
      for (Int q : {Int(3), Int(5), Int(7)})
        if (!alg.vanishes_mod(rep.diff, q))
          return tag.str() + "difference survives reduction mod " + std::to_string(q);
    }
  }
  return std::nullopt;
}

// --- 3 -----------------------------------------------------------------

std::optional<std::string> criterion_full_twist_collapse() {
  for (int n : {4, 5}) {
    for (int m = 1; m <= 3; ++m) {
      InvariantValue tw = K_M(full_twist_word(n), n, m, g_store);
      InvariantValue id = K_M(BraidWord(n), n, m, g_store);
      if (!(tw == id)) {
        std::ostringstream os;
        os << "(n=" << n << ", m=" << m << ") full twist survives the quotient invariant";
        return os.str();
      }
    }
  }
  return std::nullopt;
}

// --- 4 -----------------------------------------------------------------

std::optional<std::string> criterion_graded_ranks() {
  auto start = std::chrono::steady_clock::now();
  for (int d = 0; d <= 4; ++d) {
    GradedRank r = graded_ranks(g_store, AlgebraPresentation::pm_reduced, 3, d);
    if (r.free_rank != (Int(1) << d) || !r.torsion.empty()) {
      std::ostringstream os;
      os << "pm_reduced(3) degree " << d << ": rank " << r.free_rank << ", expected " << (1 << d);
      return os.str();
    }
  }
  for (int N = 3; N <= 5; ++N) {
    GradedRank r = graded_ranks(g_store, AlgebraPresentation::sphere_reduced, N, 1);
    if (r.torsion != std::vector<Int>{2}) {
      std::ostringstream os;
      os << "sphere_reduced(" << N << ") degree 1 torsion is not exactly one Z/2";
      return os.str();
    }
  }
  for (int n = 3; n <= 6; ++n) {
    GradedRank a = graded_ranks(g_store, AlgebraPresentation::ihara, n, 1);
    GradedRank b = graded_ranks(g_store, AlgebraPresentation::sphere_reduced, n - 1, 1);
    if (!(a == b)) {
      std::ostringstream os;
      os << "ihara(" << n << ") and sphere_reduced(" << n - 1 << ") disagree in degree 1";
      return os.str();
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > 120.0) return "exceeded the two-minute budget: " + std::to_string(secs) + "s";
  return std::nullopt;
}

// --- 5 -----------------------------------------------------------------

std::optional<std::string> criterion_graded_multiplicativity() {
  const int n = 4, m = 3;
  PairAlgebra alg(g_store, AlgebraPresentation::pm_reduced, n - 1, m);
  SplitMix64 rng(1005);
  for (int t = 0; t < 100; ++t) {
    PureWord u = random_pure_word(rng, n, 8);
    PureWord v = random_pure_word(rng, n, 8);
    SpherePair lu = lambda(u.expand(), n, m, g_store);
    SpherePair lv = lambda(v.expand(), n, m, g_store);
    SpherePair luv = lambda((u * v).expand(), n, m, g_store);
    // lambda((u-1)(v-1)) through linearity in the group ring
    SpherePair lhs = alg.add(alg.sub(alg.sub(luv, lu), lv), alg.one());
    SpherePair rhs = alg.mul(alg.sub(lu, alg.one()), alg.sub(lv, alg.one()));
    for (int d = 0; d <= 2; ++d)
      if (lhs.P.coords[static_cast<std::size_t>(d)] != rhs.P.coords[static_cast<std::size_t>(d)]) {
        std::ostringstream os;
        os << "trial " << t << ": free parts differ in degree " << d;
        return os.str();
      }
    for (int d = 0; d <= 1; ++d)
      if (lhs.Q.coords[static_cast<std::size_t>(d)] != rhs.Q.coords[static_cast<std::size_t>(d)]) {
        std::ostringstream os;
        os << "trial " << t << ": torsion parts differ in degree " << d;
        return os.str();
      }
  }
  return std::nullopt;
}

// --- 6 -----------------------------------------------------------------

std::optional<std::string> criterion_degree_one() {
  SplitMix64 rng(1006);
  for (int t = 0; t < 100; ++t) {
    int n = 3 + t % 3;
    PureWord w = random_pure_word(rng, n, 10);
    GeneratorSet g = GeneratorSet::upto(n);

    CanonicalElement e = mu(w.expand(), n, 1, g_store);
    std::vector<Int> expo = exponent_vector(comb(w.expand()).flatten(), g);
    if (e.coords[1] != expo) {
      std::ostringstream os;
      os << "trial " << t << ": degree-1 part of mu is not the combed exponent vector";
      return os.str();
    }

    // lambda: the same vector pushed through strand elimination and row/z reduction
    SpherePair lam = lambda(w.expand(), n, 1, g_store);
    PureWord bar = eliminate_last_index(comb(w.expand()).flatten(), n);
    GeneratorSet gb = GeneratorSet::upto(n - 1);
    NCPoly deg1(n - 1, 1);
    std::vector<Int> be = exponent_vector(bar, gb);
    for (std::size_t k = 0; k < gb.count(); ++k) {
      auto [i, j] = gb.pairs[k];
      deg1 += NCPoly::generator(n - 1, 1, i, j).scale(be[k]);
    }
    Quotient qp(g_store, AlgebraPresentation::pm_reduced, n - 1, 1);
    if (lam.P.coords[1] != qp.reduce(deg1).coords[1]) {
      std::ostringstream os;
      os << "trial " << t << ": degree-1 part of lambda is not the reduced exponent vector";
      return os.str();
    }

    AbelianizationReport rep = h1_oracle(GroupPresentation::gvb_sphere_pure, n, w);
    Int eps = pos_mod(lam.Q.coords[0][0], 2);
    if (rep.word_torsion != std::vector<Int>{eps}) {
      std::ostringstream os;
      os << "trial " << t << ": parity bit disagrees with the abelianization oracle";
      return os.str();
    }
    bool lam_zero = true;
    for (Int c : lam.P.coords[1]) lam_zero = lam_zero && c == 0;
    bool h1_zero = true;
    for (Int c : rep.word_free) h1_zero = h1_zero && c == 0;
    if (lam_zero != h1_zero) {
      std::ostringstream os;
      os << "trial " << t << ": free-part vanishing disagrees with the abelianization oracle";
      return os.str();
    }
  }

  // products of relators are trivial in the group: every degree-1 shadow must die
  SplitMix64 rng2(1007);
  for (int t = 0; t < 10; ++t) {
    int n = 3 + t % 3;
    auto rels = pure_relators(n, GroupPresentation::gvb_sphere_pure);
    PureWord w(n);
    for (int k = 0; k < 3; ++k) {
      PureWord r = rels[rng2.below(rels.size())];
      if (rng2.coin()) r = r.inverse();
      w = w * r;
    }
    SpherePair lam = lambda(w.expand(), n, 1, g_store);
    AbelianizationReport rep = h1_oracle(GroupPresentation::gvb_sphere_pure, n, w);
    for (Int c : lam.P.coords[1])
      if (c != 0) return "relator product has a nonzero degree-1 free part";
    if (pos_mod(lam.Q.coords[0][0], 2) != 0) return "relator product has a nonzero parity bit";
    for (Int c : rep.word_free)
      if (c != 0) return "relator product has a nonzero free class in the oracle";
    if (rep.word_torsion != std::vector<Int>{0})
      return "relator product has a nonzero torsion class in the oracle";
  }
  return std::nullopt;
}

// --- 7 -----------------------------------------------------------------

std::optional<std::string> criterion_oracle_equivalence() {
  SplitMix64 rng(1008);
  for (AlgebraPresentation pres :
       {AlgebraPresentation::kohno_4T, AlgebraPresentation::ihara,
        AlgebraPresentation::pm_reduced, AlgebraPresentation::sphere_reduced}) {
    Quotient q(g_store, pres, 3, 3);
    for (int t = 0; t < 200; ++t) {
      NCPoly p(3, 3);
      for (int d = 0; d <= 3; ++d)
        for (auto& c : p.component(d)) c = rng.range(-5, 5);
      if (!(naive_reduce_oracle(p, pres) == q.reduce(p))) {
        std::ostringstream os;
        os << presentation_id(pres) << " trial " << t
           << ": independent reduction disagrees with the table";
        return os.str();
      }
    }
  }
  for (int t = 0; t < 200; ++t) {
    int n = 2 + t % 4;
    PureWord w = random_pure_word(rng, n, static_cast<int>(rng.below(31)));
    BraidWord expanded = w.expand();
    if (!braid_equal_oracle(comb(expanded).expand(), expanded)) {
      std::ostringstream os;
      os << "trial " << t << " (n=" << n << "): combing changed the braid";
      return os.str();
    }
  }
  return std::nullopt;
}

// --- 8 -----------------------------------------------------------------

std::optional<std::string> criterion_parity_character() {
  SplitMix64 rng(1009);
  for (int t = 0; t < 100; ++t) {
    int n = 3 + t % 3;
    PureWord w = random_pure_word(rng, n, 12);
    AbelianizationReport rep = h1_oracle(GroupPresentation::gvb_sphere_pure, n, w);
    if (rep.word_torsion != std::vector<Int>{epsilon_character(w, n)}) {
      std::ostringstream os;
      os << "trial " << t << " (n=" << n << "): parity character disagrees with the oracle";
      return os.str();
    }
  }
  for (int t = 0; t < 50; ++t) {
    int n = 3 + t % 2;
    PairAlgebra alg(g_store, AlgebraPresentation::pm_reduced, n - 1, 2);
    PureWord q = random_pure_word(rng, n, 8);
    SpherePair lhs = lambda((q * delta_sq_pure_word(n)).expand(), n, 2, g_store);
    SpherePair rhs = alg.mul(lambda(q.expand(), n, 2, g_store), alg.one_plus_x());
    if (!(lhs == rhs)) {
      std::ostringstream os;
      os << "trial " << t << " (n=" << n << "): central twist does not multiply by 1+x";
      return os.str();
    }
  }
  return std::nullopt;
}

// --- 9 -----------------------------------------------------------------

std::optional<std::string> criterion_pair_arithmetic() {
  for (int N = 2; N <= 3; ++N) {
    PairAlgebra alg(g_store, AlgebraPresentation::pm_reduced, N, 3);
    SpherePair e = alg.one_plus_x();
    if (!(alg.mul(e, e) == alg.one())) return "(1+x)^2 is not 1";
  }

  PairAlgebra alg(g_store, AlgebraPresentation::pm_reduced, 2, 3);
  int checked = 0;
  for (int v = 0; v <= 2; ++v)
    for (int k = 0; k <= 2; ++k)
      for (Int odd1 : {Int(1), Int(3)})
        for (Int odd2 : {Int(1), Int(3)}) {
          SpherePair a = alg.add(alg.one(), alg.scale(pow2(k) * odd2, alg.x()));
          SpherePair za1 = alg.scale(pow2(v) * odd1, alg.sub(a, alg.one()));
          int got = alg.filtration_degree(za1);
          int want = (v + k + 1 <= 3) ? v + k + 1 : INF_DEGREE;
          if (got != want) {
            std::ostringstream os;
            os << "v=" << v << " k=" << k << ": filtration " << got << ", expected " << want;
            return os.str();
          }
          ++checked;
        }
  if (checked < 20) return "fewer than 20 constructed pairs";
  return std::nullopt;
}

// --- 10 ----------------------------------------------------------------

std::optional<std::string> criterion_determinism() {
  namespace fs = std::filesystem;
  fs::path base = fs::temp_directory_path() / ("vass-accept-" + std::to_string(::getpid()));
  fs::path da = base / "a", db = base / "b";
  fs::remove_all(base);

  auto build_all = [](const fs::path& dir) {
    TableStore store(dir.string());
    for (AlgebraPresentation pres :
         {AlgebraPresentation::kohno_4T, AlgebraPresentation::ihara,
          AlgebraPresentation::pm_reduced, AlgebraPresentation::sphere_reduced})
      for (int N = 2; N <= 5; ++N)
        for (int d = 0; d <= 3; ++d) store.get(pres, N, d);
  };
  build_all(da);
  build_all(db);

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(da))
    if (entry.path().extension() == ".vasscache") files.push_back(entry.path().filename());
  if (files.size() != 64) {
    fs::remove_all(base);
    return "expected 64 cache files, found " + std::to_string(files.size());
  }
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  for (const auto& name : files) {
    if (!fs::exists(db / name)) {
      fs::remove_all(base);
      return "second build is missing " + name.string();
    }
    if (slurp(da / name) != slurp(db / name)) {
      fs::remove_all(base);
      return "cache files differ between cold builds: " + name.string();
    }
  }
  fs::remove_all(base);

  for (std::vector<std::string> args :
       {std::vector<std::string>{"check-relations", "--group", "bs2", "--n", "3", "--m", "2",
                                 "--trials", "6", "--seed", "11", "--format", "json"},
        std::vector<std::string>{"invariant", "--group", "bs2", "--n", "4", "--m", "2",
                                 "--word", "s1 s1", "--format", "json"},
        std::vector<std::string>{"compare", "--group", "bs2", "--n", "3", "--m", "2", "--word",
                                 "s1 s1", "--word2", "", "--format", "human"}}) {
    std::ostringstream o1, e1, o2, e2;
    int c1 = run_cli(args, o1, e1);
    int c2 = run_cli(args, o2, e2);
    if (c1 != c2 || o1.str() != o2.str())
      return "command output is not byte-stable under a fixed seed";
  }
  return std::nullopt;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<std::optional<std::string>()> fn;
  };
  const std::vector<Entry> criteria{
      {"1. relator invariance of the sphere invariant (200 insertions, n=3..5, m<=3)",
       criterion_relator_invariance},
      {"2. full twist vs trivial braid: pure 2-power torsion of order exactly 2^m",
       criterion_torsion_pair},
      {"3. full twist dies in the mapping class invariant (n=4,5, m<=3)",
       criterion_full_twist_collapse},
      {"4. graded ranks: 2^d tower, one Z/2 sphere class, index-shift agreement",
       criterion_graded_ranks},
      {"5. products of augmentation differences agree through filtration 2 (100 pairs)",
       criterion_graded_multiplicativity},
      {"6. degree-1 coordinates equal combed exponent vectors, oracle cross-check",
       criterion_degree_one},
      {"7. independent reduction and combing round-trip oracles (200 each)",
       criterion_oracle_equivalence},
      {"8. parity character matches the abelianization; central twist multiplies by 1+x",
       criterion_parity_character},
      {"9. pair arithmetic: (1+x)^2 = 1 and the valuation formula v+k+1",
       criterion_pair_arithmetic},
      {"10. cold table builds and seeded command output are byte-identical",
       criterion_determinism},
  };

  int failures = 0;
  for (const auto& entry : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::optional<std::string> failure;
    try {
      failure = entry.fn();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1fs", secs);
    if (failure) {
      ++failures;
      std::cout << "[FAIL] " << entry.name << " (" << buf << "): " << *failure << std::endl;
    } else {
      std::cout << "[PASS] " << entry.name << " (" << buf << ")" << std::endl;
    }
  }
  std::cout << (failures ? "acceptance: FAILED, " : "acceptance: ")
            << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " criteria passed\n";
  return failures ? 1 : 0;
}
