#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vass/invariants.hpp"
#include "vass/relators.hpp"
#include "vass/words.hpp"

namespace vass {

inline BraidWord random_braid_word(SplitMix64& rng, int n, int len) {
  BraidWord w(n);
  for (int t = 0; t < len; ++t) w.push(rng.range(1, n - 1), rng.coin() ? 1 : -1);
  return w;
}

inline PureWord random_pure_word(SplitMix64& rng, int n, int len) {
  PureWord w(n);
  for (int t = 0; t < len; ++t) {
    int i = rng.range(1, n - 1);
    w.push(i, rng.range(i + 1, n), rng.coin() ? 1 : -1);
  }
  return w;
}

inline BraidWord splice_braid(const BraidWord& w, std::size_t at, const BraidWord& ins) {
  BraidWord out(w.strands());
  for (std::size_t k = 0; k <= w.letters().size(); ++k) {
    if (k == at)
      for (const auto& l : ins.letters()) out.push(l.index, l.sign);
    if (k < w.letters().size()) out.push(w.letters()[k].index, w.letters()[k].sign);
  }
  return out;
}

inline PureWord splice_pure(const PureWord& w, std::size_t at, const PureWord& ins) {
  PureWord out(w.strands());
  for (std::size_t k = 0; k <= w.letters().size(); ++k) {
    if (k == at)
      for (const auto& l : ins.letters()) out.push(l.i, l.j, l.sign);
    if (k < w.letters().size()) {
      const auto& l = w.letters()[k];
      out.push(l.i, l.j, l.sign);
    }
  }
  return out;
}

struct SuiteResult {
  int trials = 0;
  int failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

namespace detail {

inline InvariantValue pure_group_value(Group g, const PureWord& w, int n, int m,
                                       TableStore& store) {
  if (g == Group::pmn) {
    CanonicalElement p = kappa(w, n, m, store);
    Quotient q(store, AlgebraPresentation::pm_reduced, n - 1, m);
    return {g, n, m, Permutation(n - 1), SpherePair{std::move(p), q.zero()}};
  }
  return evaluate_value(g, w.expand(), n, m, store);
}

}  // namespace detail

// inserts a random defining relator (or its inverse) at a random position of a
// random word and demands the invariant not move
inline SuiteResult relator_invariance_suite(Group g, int n, int m, int trials,
                                            std::uint64_t seed, TableStore& store) {
  SplitMix64 rng(seed);
  SuiteResult out;
  out.trials = trials;
  for (int t = 0; t < trials; ++t) {
    bool ok = true;
    if (g == Group::bs2 || g == Group::mn) {
      auto rels = sigma_relators(n, g == Group::mn ? GroupPresentation::mcg_sphere
                                                   : GroupPresentation::sphere_braid);
      BraidWord w = random_braid_word(rng, n, rng.range(0, 12));
      BraidWord r = rels[static_cast<std::size_t>(rng.below(rels.size()))];
      if (rng.coin()) r = r.inverse();
      BraidWord spliced = splice_braid(w, static_cast<std::size_t>(rng.below(w.size() + 1)), r);
      ok = evaluate_value(g, w, n, m, store) == evaluate_value(g, spliced, n, m, store);
    } else {
      int strands = g == Group::pmn ? n - 1 : n;
      auto rels = pure_relators(strands, g == Group::ps2 ? GroupPresentation::gvb_sphere_pure
                                                         : GroupPresentation::burau_pure);
      if (g == Group::pmn) rels.push_back(delta_sq_pure_word(strands));
      PureWord w = random_pure_word(rng, strands, rng.range(0, 10));
      PureWord r = rels[static_cast<std::size_t>(rng.below(rels.size()))];
      if (rng.coin()) r = r.inverse();
      PureWord spliced =
          splice_pure(w, static_cast<std::size_t>(rng.below(w.letters().size() + 1)), r);
      ok = detail::pure_group_value(g, w, n, m, store) ==
           detail::pure_group_value(g, spliced, n, m, store);
    }
    if (!ok) {
      ++out.failures;
      if (out.first_failure.empty())
        out.first_failure = "trial " + std::to_string(t) + " (group " + group_id(g) + ", n=" +
                            std::to_string(n) + ", m=" + std::to_string(m) + ")";
    }
  }
  return out;
}

}  // namespace vass
