#pragma once

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include <fcntl.h>
#include <unistd.h>

#include "vass/intmat.hpp"
#include "vass/ncpoly.hpp"
#include "vass/presentations.hpp"

namespace vass {

struct TableUnavailable : std::runtime_error {
  explicit TableUnavailable(const std::string& what) : std::runtime_error(what) {}
};

struct CacheError : std::runtime_error {
  explicit CacheError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::uint64_t kTableEntryCap = 30'000'000;

// Degree-d canonical forms for one presentation: the span of all u*r*v in degree
// d is row-reduced once; a coefficient vector is reduced by sweeping the echelon
// rows, and its canonical coordinates live on the surviving basis monomials.
struct ReductionTable {
  AlgebraPresentation pres{};
  int N = 0;
  int d = 0;
  std::size_t gens = 0;
  std::uint64_t monomials = 0;
  std::vector<std::uint64_t> basis;           // monomial codes, increasing
  std::vector<Int> moduli;                    // per basis entry; 0 = free coordinate
  std::vector<Int> smith;                     // invariant factors > 1 of the span lattice
  std::vector<std::size_t> pivots;            // echelon pivot columns, increasing
  std::vector<std::vector<Int>> rows;         // echelon rows, dense over all monomials
  std::vector<std::vector<Int>> mono_coords;  // canonical coordinates per monomial code

  std::uint64_t free_rank() const { return monomials - pivots.size(); }

  void reduce_vector(std::vector<Int>& v) const {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      std::size_t p = pivots[k];
      Int q = floor_div(v[p], rows[k][p]);
      if (q == 0) continue;
      const auto& row = rows[k];
      for (std::size_t c = p; c < row.size(); ++c)
        if (row[c] != 0) v[c] = checked_sub(v[c], checked_mul(q, row[c]));
    }
  }

  std::vector<Int> coords_of(const std::vector<Int>& full) const {
    std::vector<Int> out(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
      out[k] = full[static_cast<std::size_t>(basis[k])];
    return out;
  }
};

inline ReductionTable build_reduction_table(AlgebraPresentation pres, int N, int d) {
  if (N < 1 || d < 0) throw std::invalid_argument("bad table parameters");
  ReductionTable t;
  t.pres = pres;
  t.N = N;
  t.d = d;
  t.gens = generator_count(N);
  t.monomials = monomial_count(t.gens, d);

  std::vector<NCPoly> relators = algebra_relators(pres, N);
  std::vector<std::pair<const NCPoly*, int>> active;  // relator with its degree
  std::uint64_t row_estimate = 0;
  for (const auto& r : relators) {
    int e = -1;
    for (int k = 0; k <= r.truncation(); ++k) {
      bool nonzero = false;
      for (Int c : r.component(k))
        if (c != 0) nonzero = true;
      if (!nonzero) continue;
      if (e != -1) throw std::logic_error("inhomogeneous relator");
      e = k;
    }
    if (e == -1 || e > d) continue;
    active.emplace_back(&r, e);
    row_estimate += static_cast<std::uint64_t>(d - e + 1) * monomial_count(t.gens, d - e);
  }
  if (row_estimate * t.monomials > kTableEntryCap)
    throw std::runtime_error("reduction table too large: " + presentation_id(pres) + " N=" +
                             std::to_string(N) + " d=" + std::to_string(d));

  std::vector<std::vector<BigInt>> span;
  span.reserve(static_cast<std::size_t>(row_estimate));
  for (auto [r, e] : active) {
    const auto& comp = r->component(e);
    std::uint64_t pe = monomial_count(t.gens, e);
    for (int du = 0; du + e <= d; ++du) {
      int dv = d - e - du;
      std::uint64_t pu = monomial_count(t.gens, du);
      std::uint64_t pv = monomial_count(t.gens, dv);
      for (std::uint64_t cu = 0; cu < pu; ++cu)
        for (std::uint64_t cv = 0; cv < pv; ++cv) {
          std::vector<BigInt> row(static_cast<std::size_t>(t.monomials), 0);
          for (std::uint64_t cm = 0; cm < pe; ++cm) {
            Int c = comp[static_cast<std::size_t>(cm)];
            if (c == 0) continue;
            std::uint64_t col = (cu * pe + cm) * pv + cv;
            row[static_cast<std::size_t>(col)] += c;
          }
          span.push_back(std::move(row));
        }
    }
  }

  HermiteForm h = hermite_form(std::move(span), static_cast<std::size_t>(t.monomials));
  t.pivots = h.pivots;
  t.smith.clear();
  for (const auto& f : smith_form(h.rows, static_cast<std::size_t>(t.monomials)).torsion())
    t.smith.push_back(narrow_to_int(f));
  t.rows.reserve(h.rows.size());
  for (const auto& row : h.rows) {
    std::vector<Int> r(row.size());
    for (std::size_t c = 0; c < row.size(); ++c) r[c] = narrow_to_int(row[c]);
    t.rows.push_back(std::move(r));
  }

  std::size_t next_pivot = 0;
  for (std::uint64_t col = 0; col < t.monomials; ++col) {
    if (next_pivot < t.pivots.size() && t.pivots[next_pivot] == col) {
      Int diag = t.rows[next_pivot][static_cast<std::size_t>(col)];
      ++next_pivot;
      if (diag == 1) continue;  // eliminated coordinate
      t.basis.push_back(col);
      t.moduli.push_back(diag);
    } else {
      t.basis.push_back(col);
      t.moduli.push_back(0);
    }
  }

  t.mono_coords.reserve(static_cast<std::size_t>(t.monomials));
  for (std::uint64_t code = 0; code < t.monomials; ++code) {
    std::vector<Int> v(static_cast<std::size_t>(t.monomials), 0);
    v[static_cast<std::size_t>(code)] = 1;
    t.reduce_vector(v);
    t.mono_coords.push_back(t.coords_of(v));
  }
  return t;
}

// ---- textual cache with a trailing checksum ----

namespace detail {

inline std::uint64_t parse_monomial_token(const std::string& tok, int d, const GeneratorSet& g) {
  if (d == 0) {
    if (tok != "-") throw CacheError("bad degree-0 monomial token '" + tok + "'");
    return 0;
  }
  std::uint64_t code = 0;
  int seen = 0;
  std::size_t pos = 0;
  while (pos < tok.size()) {
    std::size_t dot = tok.find('.', pos);
    std::string part = tok.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
    std::size_t comma = part.find(',');
    if (comma == std::string::npos) throw CacheError("bad monomial token '" + tok + "'");
    int i = std::stoi(part.substr(0, comma));
    int j = std::stoi(part.substr(comma + 1));
    code = code * g.count() + g.index_of(i, j);
    ++seen;
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  if (seen != d) throw CacheError("monomial token '" + tok + "' has wrong degree");
  return code;
}

}  // namespace detail

inline std::string serialize_table(const ReductionTable& t) {
  GeneratorSet g = GeneratorSet::upto(t.N);
  std::ostringstream os;
  os << "VASS-CACHE-1\n";
  os << "presentation=" << presentation_id(t.pres) << " N=" << t.N << " d=" << t.d << "\n";
  os << "basis=" << t.basis.size();
  for (auto code : t.basis) os << ' ' << monomial_str(code, t.d, g);
  os << "\nsmith=";
  for (std::size_t k = 0; k < t.smith.size(); ++k) os << (k ? " " : "") << t.smith[k];
  os << "\n";
  for (std::uint64_t code = 0; code < t.monomials; ++code) {
    os << monomial_str(code, t.d, g);
    const auto& coords = t.mono_coords[static_cast<std::size_t>(code)];
    for (Int c : coords) os << ' ' << c;
    os << " |";
    for (Int mo : t.moduli) os << ' ' << mo;
    os << "\n";
  }
  os << "rows=" << t.rows.size() << "\n";
  for (std::size_t k = 0; k < t.rows.size(); ++k) {
    os << "row " << t.pivots[k];
    for (Int c : t.rows[k]) os << ' ' << c;
    os << "\n";
  }
  std::string body = os.str();
  return body + "checksum=" + std::to_string(fnv1a(body.data(), body.size())) + "\n";
}

inline ReductionTable parse_table(const std::string& text) {
  std::size_t mark = text.rfind("checksum=");
  if (mark == std::string::npos || mark == 0) throw CacheError("cache file has no checksum");
  std::string body = text.substr(0, mark);
  std::string tail = text.substr(mark);
  if (tail.back() != '\n') throw CacheError("cache file truncated");
  std::uint64_t want = std::stoull(tail.substr(9));
  if (fnv1a(body.data(), body.size()) != want) throw CacheError("cache checksum mismatch");

  std::istringstream is(body);
  std::string line;
  if (!std::getline(is, line) || line != "VASS-CACHE-1")
    throw CacheError("cache version mismatch (expected VASS-CACHE-1)");

  ReductionTable t;
  if (!std::getline(is, line)) throw CacheError("cache header missing");
  {
    std::istringstream hs(line);
    std::string pres_field, n_field, d_field;
    hs >> pres_field >> n_field >> d_field;
    if (pres_field.rfind("presentation=", 0) != 0 || n_field.rfind("N=", 0) != 0 ||
        d_field.rfind("d=", 0) != 0)
      throw CacheError("malformed cache header '" + line + "'");
    t.pres = presentation_from_id(pres_field.substr(13));
    t.N = std::stoi(n_field.substr(2));
    t.d = std::stoi(d_field.substr(2));
  }
  t.gens = generator_count(t.N);
  t.monomials = monomial_count(t.gens, t.d);
  GeneratorSet g = GeneratorSet::upto(t.N);

  if (!std::getline(is, line) || line.rfind("basis=", 0) != 0)
    throw CacheError("cache basis line missing");
  {
    std::istringstream bs(line.substr(6));
    std::size_t k;
    bs >> k;
    std::string tok;
    while (bs >> tok) t.basis.push_back(detail::parse_monomial_token(tok, t.d, g));
    if (t.basis.size() != k) throw CacheError("cache basis count mismatch");
  }
  if (!std::getline(is, line) || line.rfind("smith=", 0) != 0)
    throw CacheError("cache smith line missing");
  {
    std::istringstream ss(line.substr(6));
    Int f;
    while (ss >> f) t.smith.push_back(f);
  }
  t.mono_coords.resize(static_cast<std::size_t>(t.monomials));
  bool moduli_known = false;
  for (std::uint64_t code = 0; code < t.monomials; ++code) {
    if (!std::getline(is, line)) throw CacheError("cache monomial block truncated");
    std::istringstream ms(line);
    std::string tok;
    ms >> tok;
    if (detail::parse_monomial_token(tok, t.d, g) != code)
      throw CacheError("cache monomial out of order: '" + tok + "'");
    std::vector<Int> coords;
    while (ms >> tok && tok != "|") coords.push_back(std::stoll(tok));
    if (coords.size() != t.basis.size()) throw CacheError("cache coordinate width mismatch");
    std::vector<Int> moduli;
    Int mo;
    while (ms >> mo) moduli.push_back(mo);
    if (moduli.size() != t.basis.size()) throw CacheError("cache moduli width mismatch");
    if (!moduli_known) {
      t.moduli = std::move(moduli);
      moduli_known = true;
    } else if (moduli != t.moduli) {
      throw CacheError("cache moduli lines disagree");
    }
    t.mono_coords[static_cast<std::size_t>(code)] = std::move(coords);
  }
  if (!moduli_known) t.moduli.assign(t.basis.size(), 0);
  if (!std::getline(is, line) || line.rfind("rows=", 0) != 0)
    throw CacheError("cache rows line missing");
  std::size_t nrows = std::stoul(line.substr(5));
  for (std::size_t k = 0; k < nrows; ++k) {
    if (!std::getline(is, line)) throw CacheError("cache row block truncated");
    std::istringstream rs(line);
    std::string tag;
    std::size_t pivot;
    rs >> tag >> pivot;
    if (tag != "row") throw CacheError("malformed cache row line");
    std::vector<Int> row;
    row.reserve(static_cast<std::size_t>(t.monomials));
    Int c;
    while (rs >> c) row.push_back(c);
    if (row.size() != t.monomials) throw CacheError("cache row width mismatch");
    t.pivots.push_back(pivot);
    t.rows.push_back(std::move(row));
  }
  return t;
}

// In-memory table registry with an optional on-disk cache directory. Files are
// written atomically (temp + rename) behind an advisory .lock file.
class TableStore {
 public:
  explicit TableStore(std::string cache_dir = default_cache_dir(), bool no_build = false)
      : cache_dir_(std::move(cache_dir)), no_build_(no_build) {}

  static std::string default_cache_dir() {
    const char* env = std::getenv("VASS_CACHE_DIR");
    return env ? env : "";
  }

  std::shared_ptr<const ReductionTable> get(AlgebraPresentation pres, int N, int d) {
    std::scoped_lock lock(mu_);
    auto key = std::make_tuple(pres, N, d);
    if (auto it = mem_.find(key); it != mem_.end()) return it->second;

    std::shared_ptr<const ReductionTable> table;
    if (!cache_dir_.empty()) {
      std::filesystem::path path = file_path(pres, N, d);
      if (std::filesystem::exists(path)) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        ReductionTable parsed = parse_table(buf.str());
        if (parsed.pres != pres || parsed.N != N || parsed.d != d)
          throw CacheError("cache file " + path.string() + " has mismatched parameters");
        table = std::make_shared<ReductionTable>(std::move(parsed));
      }
    }
    if (!table) {
      if (no_build_)
        throw TableUnavailable("no cached table for " + presentation_id(pres) + " N=" +
                               std::to_string(N) + " d=" + std::to_string(d));
      table = std::make_shared<ReductionTable>(build_reduction_table(pres, N, d));
      if (!cache_dir_.empty()) write_file(file_path(pres, N, d), serialize_table(*table));
    }
    mem_.emplace(key, table);
    return table;
  }

  const std::string& cache_dir() const { return cache_dir_; }

  std::filesystem::path file_path(AlgebraPresentation pres, int N, int d) const {
    return std::filesystem::path(cache_dir_) /
           (presentation_id(pres) + "-N" + std::to_string(N) + "-d" + std::to_string(d) +
            ".vasscache");
  }

 private:
  static void write_file(const std::filesystem::path& path, const std::string& text) {
    std::filesystem::create_directories(path.parent_path());
    std::filesystem::path lock = path;
    lock += ".lock";
    int fd = -1;
    for (int attempt = 0; attempt < 200; ++attempt) {
      fd = ::open(lock.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
      if (fd >= 0) break;
      std::this_thread::sleep_for(std::chrono::milliseconds(10));
    }
    if (fd < 0) return;  // another writer is active; they produce identical bytes
    ::close(fd);
    std::filesystem::path tmp = path;
    tmp += ".tmp" + std::to_string(::getpid());
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << text;
    }
    std::filesystem::rename(tmp, path);
    std::filesystem::remove(lock);
  }

  std::string cache_dir_;
  bool no_build_;
  std::mutex mu_;
  std::map<std::tuple<AlgebraPresentation, int, int>, std::shared_ptr<const ReductionTable>> mem_;
};

inline constexpr int INF_DEGREE = 1 << 30;

// coordinates of an algebra element over the per-degree table bases
struct CanonicalElement {
  AlgebraPresentation pres{};
  int N = 0;
  int m = 0;
  std::vector<std::vector<Int>> coords;  // degree 0..m

  bool is_zero() const {
    for (const auto& comp : coords)
      for (Int v : comp)
        if (v != 0) return false;
    return true;
  }

  int filtration() const {
    for (int d = 0; d < static_cast<int>(coords.size()); ++d)
      for (Int v : coords[static_cast<std::size_t>(d)])
        if (v != 0) return d;
    return INF_DEGREE;
  }

  friend bool operator==(const CanonicalElement&, const CanonicalElement&) = default;
};

struct GradedRank {
  Int free_rank = 0;
  std::vector<Int> torsion;
  friend bool operator==(const GradedRank&, const GradedRank&) = default;
};

// one presentation at one truncation: owns the tables and the canonical arithmetic
class Quotient {
 public:
  Quotient(TableStore& store, AlgebraPresentation pres, int N, int m)
      : pres_(pres), N_(N), m_(m) {
    for (int d = 0; d <= m; ++d) tables_.push_back(store.get(pres, N, d));
  }

  AlgebraPresentation presentation() const { return pres_; }
  int index_bound() const { return N_; }
  int truncation() const { return m_; }
  const ReductionTable& table(int d) const { return *tables_[static_cast<std::size_t>(d)]; }

  CanonicalElement reduce(const NCPoly& u) const {
    if (u.index_bound() != N_ || u.truncation() != m_)
      throw std::invalid_argument("polynomial does not match the quotient parameters");
    CanonicalElement e;
    e.pres = pres_;
    e.N = N_;
    e.m = m_;
    for (int d = 0; d <= m_; ++d) {
      std::vector<Int> v = u.component(d);
      table(d).reduce_vector(v);
      e.coords.push_back(table(d).coords_of(v));
    }
    return e;
  }

  NCPoly section(const CanonicalElement& e) const {
    check(e);
    NCPoly u(N_, m_);
    for (int d = 0; d <= m_; ++d) {
      const auto& tb = table(d);
      auto& comp = u.component(d);
      for (std::size_t k = 0; k < tb.basis.size(); ++k)
        comp[static_cast<std::size_t>(tb.basis[k])] = e.coords[static_cast<std::size_t>(d)][k];
    }
    return u;
  }

  CanonicalElement unit() const { return reduce(NCPoly::unit(N_, m_)); }
  CanonicalElement zero() const { return reduce(NCPoly(N_, m_)); }

  CanonicalElement add(const CanonicalElement& a, const CanonicalElement& b) const {
    return reduce(section(a) + section(b));
  }
  CanonicalElement sub(const CanonicalElement& a, const CanonicalElement& b) const {
    return reduce(section(a) - section(b));
  }
  CanonicalElement scale(Int c, const CanonicalElement& a) const {
    return reduce(section(a).scale(c));
  }
  CanonicalElement mul(const CanonicalElement& a, const CanonicalElement& b) const {
    return reduce(nc_mul(section(a), section(b)));
  }

  bool torsion_free() const {
    for (int d = 0; d <= m_; ++d)
      for (Int mo : table(d).moduli)
        if (mo != 0) return false;
    return true;
  }

  GradedRank rank(int d) const {
    GradedRank r;
    r.free_rank = static_cast<Int>(table(d).free_rank());
    r.torsion = table(d).smith;
    return r;
  }

 private:
  void check(const CanonicalElement& e) const {
    if (e.pres != pres_ || e.N != N_ || e.m != m_)
      throw std::invalid_argument("element does not match the quotient parameters");
  }

  AlgebraPresentation pres_;
  int N_;
  int m_;
  std::vector<std::shared_ptr<const ReductionTable>> tables_;
};

inline GradedRank graded_ranks(TableStore& store, AlgebraPresentation pres, int N, int d) {
  auto t = store.get(pres, N, d);
  GradedRank r;
  r.free_rank = static_cast<Int>(t->free_rank());
  r.torsion = t->smith;
  return r;
}

}  // namespace vass
