#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "vass/check_suite.hpp"
#include "vass/invariants.hpp"

namespace vass {

struct RunConfig {
  int n = 3;
  int m = 1;
  std::string group = "bs2";
  std::string word;
  std::string word2;
  std::string format = "human";
  std::string presentation = "pm_reduced";
  std::string cache_dir = TableStore::default_cache_dir();
  std::uint64_t seed = 1;
  int trials = 50;
  bool no_build = false;
};

namespace detail {

using json = nlohmann::ordered_json;

inline std::vector<std::string> monomial_tokens(const GeneratorSet& g, std::uint64_t code,
                                                int degree) {
  std::vector<std::string> toks;
  for (int idx : monomial_digits(code, degree, g.count())) {
    auto [i, j] = g.pairs[static_cast<std::size_t>(idx)];
    toks.push_back(std::to_string(i) + "," + std::to_string(j));
  }
  return toks;
}

inline json coords_json(const CanonicalElement& e, bool with_modulus, TableStore& store) {
  json arr = json::array();
  GeneratorSet g = GeneratorSet::upto(e.N);
  for (int d = 0; d < static_cast<int>(e.coords.size()); ++d) {
    auto table = store.get(e.pres, e.N, d);
    const auto& cs = e.coords[static_cast<std::size_t>(d)];
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (cs[k] == 0) continue;
      json entry;
      entry["degree"] = d;
      entry["monomial"] = monomial_tokens(g, table->basis[k], d);
      entry["coeff"] = cs[k];
      if (with_modulus) entry["modulus"] = pow2(e.m - d);
      arr.push_back(std::move(entry));
    }
  }
  return arr;
}

inline std::string term_str(const GeneratorSet& g, std::uint64_t code, int degree, Int coeff) {
  std::string s = std::to_string(coeff);
  for (const std::string& tok : monomial_tokens(g, code, degree)) s += "(" + tok + ")";
  return s;
}

inline void print_coords(std::ostream& out, const std::string& label, const CanonicalElement& e,
                         bool with_modulus, TableStore& store) {
  bool any = false;
  GeneratorSet g = GeneratorSet::upto(e.N);
  for (int d = 0; d < static_cast<int>(e.coords.size()); ++d) {
    auto table = store.get(e.pres, e.N, d);
    const auto& cs = e.coords[static_cast<std::size_t>(d)];
    std::string line;
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (cs[k] == 0) continue;
      if (!line.empty()) line += "  ";
      line += term_str(g, table->basis[k], d, cs[k]);
      if (with_modulus) line += " mod " + std::to_string(pow2(e.m - d));
    }
    if (!line.empty()) {
      out << label << "[" << d << "]: " << line << "\n";
      any = true;
    }
  }
  if (!any) out << label << ": 0\n";
}

inline json permutation_json(const Permutation& p) {
  json arr = json::array();
  for (int v : p.images()) arr.push_back(v);
  return arr;
}

inline std::string permutation_str(const Permutation& p) {
  std::string s;
  for (int v : p.images()) {
    if (!s.empty()) s += " ";
    s += std::to_string(v);
  }
  return s;
}

inline json filtration_json(int f) {
  if (f >= INF_DEGREE) return nullptr;
  return f;
}

inline std::string filtration_str(int f) {
  return f >= INF_DEGREE ? std::string("inf") : std::to_string(f);
}

inline int cmd_invariant(const RunConfig& cfg, std::ostream& out) {
  TableStore store(cfg.cache_dir, cfg.no_build);
  Group g = group_from_id(cfg.group);
  InvariantValue v = evaluate_word(g, cfg.word, cfg.n, cfg.m, store);
  PairAlgebra alg(store, v.value.P.pres, v.value.P.N, cfg.m);
  int filt = alg.filtration_degree(v.value);

  if (cfg.format == "json") {
    json doc;
    doc["n"] = cfg.n;
    doc["m"] = cfg.m;
    doc["group"] = cfg.group;
    doc["permutation"] = permutation_json(v.perm);
    doc["P"] = coords_json(v.value.P, false, store);
    doc["Q"] = coords_json(v.value.Q, true, store);
    doc["filtration"] = filtration_json(filt);
    out << doc.dump(2) << "\n";
  } else {
    out << "group " << cfg.group << "  n " << cfg.n << "  m " << cfg.m << "\n";
    out << "permutation: " << permutation_str(v.perm) << "\n";
    print_coords(out, "P", v.value.P, false, store);
    print_coords(out, "Q", v.value.Q, true, store);
    out << "filtration: " << filtration_str(filt) << "\n";
  }
  return 0;
}

inline int cmd_compare(const RunConfig& cfg, std::ostream& out) {
  TableStore store(cfg.cache_dir, cfg.no_build);
  Group g = group_from_id(cfg.group);
  InvariantValue a = evaluate_word(g, cfg.word, cfg.n, cfg.m, store);
  InvariantValue b = evaluate_word(g, cfg.word2, cfg.n, cfg.m, store);
  CompareReport rep = compare_values(a, b, store);

  if (cfg.format == "json") {
    json doc;
    doc["n"] = cfg.n;
    doc["m"] = cfg.m;
    doc["group"] = cfg.group;
    doc["equal"] = rep.equal;
    doc["permutations_equal"] = rep.permutations_equal;
    doc["filtration"] = filtration_json(rep.filtration);
    doc["torsion_only"] = rep.torsion_only;
    doc["annihilator"] = rep.annihilator;
    doc["P"] = coords_json(rep.diff.P, false, store);
    doc["Q"] = coords_json(rep.diff.Q, true, store);
    out << doc.dump(2) << "\n";
  } else {
    out << "group " << cfg.group << "  n " << cfg.n << "  m " << cfg.m << "\n";
    out << "permutations equal: " << (rep.permutations_equal ? "yes" : "no") << "\n";
    out << "values equal: " << (rep.equal ? "yes" : "no") << "\n";
    out << "separation filtration: " << filtration_str(rep.filtration) << "\n";
    if (rep.torsion_only)
      out << "2-power torsion, annihilator " << rep.annihilator << "\n";
    if (!rep.equal && rep.permutations_equal) {
      print_coords(out, "difference P", rep.diff.P, false, store);
      print_coords(out, "difference Q", rep.diff.Q, true, store);
    }
  }
  return rep.equal ? 0 : 1;
}

inline int cmd_check_relations(const RunConfig& cfg, std::ostream& out) {
  TableStore store(cfg.cache_dir, cfg.no_build);
  Group g = group_from_id(cfg.group);
  SuiteResult res = relator_invariance_suite(g, cfg.n, cfg.m, cfg.trials, cfg.seed, store);

  if (cfg.format == "json") {
    json doc;
    doc["group"] = cfg.group;
    doc["n"] = cfg.n;
    doc["m"] = cfg.m;
    doc["seed"] = cfg.seed;
    doc["trials"] = res.trials;
    doc["failures"] = res.failures;
    doc["first_failure"] = res.failures ? json(res.first_failure) : json(nullptr);
    doc["passed"] = res.passed();
    if (res.trials == 0) doc["warning"] = "zero trials requested; pass is vacuous";
    out << doc.dump(2) << "\n";
  } else {
    out << "group " << cfg.group << "  n " << cfg.n << "  m " << cfg.m << "  seed " << cfg.seed
        << "\n";
    out << "trials: " << res.trials << "  failures: " << res.failures << "\n";
    if (res.failures)
      out << "first failure: " << res.first_failure << "\n";
    else if (res.trials == 0)
      out << "warning: zero trials requested; pass is vacuous\n";
    else
      out << "every relator insertion preserved the invariant\n";
  }
  return res.passed() ? 0 : 1;
}

inline int cmd_gr_ranks(const RunConfig& cfg, std::ostream& out) {
  TableStore store(cfg.cache_dir, cfg.no_build);
  AlgebraPresentation pres = presentation_from_id(cfg.presentation);

  if (cfg.format == "json") {
    json doc;
    doc["presentation"] = cfg.presentation;
    doc["n"] = cfg.n;
    doc["m"] = cfg.m;
    json rows = json::array();
    for (int d = 0; d <= cfg.m; ++d) {
      GradedRank r = graded_ranks(store, pres, cfg.n, d);
      json row;
      row["degree"] = d;
      row["free_rank"] = r.free_rank;
      row["torsion"] = r.torsion;
      rows.push_back(std::move(row));
    }
    doc["ranks"] = rows;
    out << doc.dump(2) << "\n";
  } else {
    out << "presentation " << cfg.presentation << "  N " << cfg.n << "\n";
    for (int d = 0; d <= cfg.m; ++d) {
      GradedRank r = graded_ranks(store, pres, cfg.n, d);
      out << "degree " << d << ": rank " << r.free_rank;
      if (!r.torsion.empty()) {
        out << "  torsion [";
        for (std::size_t k = 0; k < r.torsion.size(); ++k)
          out << (k ? " " : "") << r.torsion[k];
        out << "]";
      }
      out << "\n";
    }
  }
  return 0;
}

inline int cmd_cache_build(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.cache_dir.empty()) {
    err << "error: cache-build needs a cache directory (--cache-dir or VASS_CACHE_DIR)\n";
    return 2;
  }
  TableStore store(cfg.cache_dir, false);
  std::vector<std::string> files;
  for (AlgebraPresentation pres :
       {AlgebraPresentation::kohno_4T, AlgebraPresentation::ihara,
        AlgebraPresentation::pm_reduced, AlgebraPresentation::sphere_reduced}) {
    for (int N = 2; N <= cfg.n; ++N)
      for (int d = 0; d <= cfg.m; ++d) {
        store.get(pres, N, d);
        files.push_back(store.file_path(pres, N, d).filename().string());
      }
  }
  if (cfg.format == "json") {
    json doc;
    doc["cache_dir"] = cfg.cache_dir;
    doc["files"] = files;
    out << doc.dump(2) << "\n";
  } else {
    out << "cache directory: " << cfg.cache_dir << "\n";
    for (const std::string& f : files) out << "ready " << f << "\n";
    out << files.size() << " tables ready\n";
  }
  return 0;
}

}  // namespace detail

// args exclude the program name; returns the process exit code
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"exact truncated invariants of sphere braids and mapping classes"};
  app.name("vass");

  auto add_common = [&](CLI::App* cmd, bool with_group) {
    if (with_group)
      cmd->add_option("--group", cfg.group, "pn | pmn | ps2 | bs2 | mn")
          ->check(CLI::IsMember({"pn", "pmn", "ps2", "bs2", "mn"}));
    cmd->add_option("--n", cfg.n, "number of strands / index bound")->required();
    cmd->add_option("--m", cfg.m, "truncation degree")->check(CLI::Range(0, 6));
    cmd->add_option("--format", cfg.format, "human | json")
        ->check(CLI::IsMember({"human", "json"}));
    cmd->add_option("--cache-dir", cfg.cache_dir, "reduction table cache directory");
    cmd->add_flag("--no-build", cfg.no_build, "fail instead of building missing tables");
  };

  CLI::App* inv = app.add_subcommand("invariant", "evaluate the invariant of one word");
  add_common(inv, true);
  inv->add_option("--word", cfg.word, "input word");

  CLI::App* cmp = app.add_subcommand("compare", "compare the invariants of two words");
  add_common(cmp, true);
  cmp->add_option("--word", cfg.word, "first word");
  cmp->add_option("--word2", cfg.word2, "second word");

  CLI::App* chk = app.add_subcommand("check-relations", "randomized relator-insertion suite");
  add_common(chk, true);
  chk->add_option("--seed", cfg.seed, "random seed");
  chk->add_option("--trials", cfg.trials, "number of insertions")->check(CLI::Range(0, 100000));

  CLI::App* grr = app.add_subcommand("gr-ranks", "graded free ranks and torsion of a quotient");
  add_common(grr, false);
  grr->add_option("--presentation", cfg.presentation,
                  "kohno_4T | ihara | pm_reduced | sphere_reduced")
      ->check(CLI::IsMember({"kohno_4T", "ihara", "pm_reduced", "sphere_reduced"}));

  CLI::App* cb = app.add_subcommand("cache-build", "precompute reduction tables");
  cb->add_option("--n", cfg.n, "largest index bound")->default_val(5);
  cb->add_option("--m", cfg.m, "largest degree")->default_val(3);
  cb->add_option("--format", cfg.format, "human | json")
      ->check(CLI::IsMember({"human", "json"}));
  cb->add_option("--cache-dir", cfg.cache_dir, "reduction table cache directory");

  app.require_subcommand(1);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (inv->parsed()) return detail::cmd_invariant(cfg, out);
    if (cmp->parsed()) return detail::cmd_compare(cfg, out);
    if (chk->parsed()) return detail::cmd_check_relations(cfg, out);
    if (grr->parsed()) return detail::cmd_gr_ranks(cfg, out);
    if (cb->parsed()) return detail::cmd_cache_build(cfg, out, err);
  } catch (const TableUnavailable& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const CacheError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace vass
