#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vass/ints.hpp"

namespace vass {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int narrow_to_int(const BigInt& v) {
  if (v < std::numeric_limits<Int>::min() || v > std::numeric_limits<Int>::max())
    throw OverflowError("matrix entry exceeds 64-bit range");
  return static_cast<Int>(v);
}

// Row Hermite normal form of the lattice spanned by the input rows: pivot columns
// strictly increasing, pivots positive, entries above a pivot reduced into
// [0, pivot). Canonical for the lattice, so independent of the input row order.
struct HermiteForm {
  std::vector<std::vector<BigInt>> rows;
  std::vector<std::size_t> pivots;  // pivot column per row, strictly increasing

  std::size_t rank() const { return rows.size(); }
};

inline HermiteForm hermite_form(std::vector<std::vector<BigInt>> a, std::size_t cols) {
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
  HermiteForm h;
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < a.size(); ++j) {
    while (true) {
      std::size_t best = a.size();
      for (std::size_t i = r; i < a.size(); ++i) {
        if (a[i][j] == 0) continue;
        if (best == a.size() || abs(a[i][j]) < abs(a[best][j])) best = i;
      }
      if (best == a.size()) break;
      if (best != r) std::swap(a[best], a[r]);
      bool leftover = false;
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (a[i][j] == 0) continue;
        BigInt q = big_floor_div(a[i][j], a[r][j]);
        if (q != 0)
          for (std::size_t c = j; c < cols; ++c) a[i][c] -= q * a[r][c];
        if (a[i][j] != 0) leftover = true;
      }
      if (!leftover) break;
    }
    if (r >= a.size() || a[r][j] == 0) continue;
    if (a[r][j] < 0)
      for (std::size_t c = j; c < cols; ++c) a[r][c] = -a[r][c];
    for (std::size_t i = 0; i < r; ++i) {
      BigInt q = big_floor_div(a[i][j], a[r][j]);
      if (q != 0)
        for (std::size_t c = j; c < cols; ++c) a[i][c] -= q * a[r][c];
    }
    h.pivots.push_back(j);
    ++r;
  }
  a.resize(r);
  h.rows = std::move(a);
  return h;
}

// Smith normal form. factors are the nonzero diagonal entries (divisibility
// chain, each positive, 1s included). When tracked, right is the unimodular V
// with U*A*V = diag(factors): the coordinates of a row vector w in the cokernel
// Z^cols / rowspace(A) are (w*V)_k modulo factors[k] (0 meaning free).
struct SmithForm {
  std::vector<BigInt> factors;
  std::vector<std::vector<BigInt>> right;  // empty unless requested

  std::vector<BigInt> torsion() const {
    std::vector<BigInt> t;
    for (const auto& f : factors)
      if (f > 1) t.push_back(f);
    return t;
  }
};

inline SmithForm smith_form(std::vector<std::vector<BigInt>> a, std::size_t cols,
                            bool track_right = false) {
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
  std::size_t rows = a.size();
  std::vector<std::vector<BigInt>> v;
  if (track_right) {
    v.assign(cols, std::vector<BigInt>(cols, 0));
    for (std::size_t k = 0; k < cols; ++k) v[k][k] = 1;
  }
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][x], a[i][y]);
    if (track_right)
      for (std::size_t i = 0; i < cols; ++i) std::swap(v[i][x], v[i][y]);
  };
  auto col_sub = [&](std::size_t y, const BigInt& q, std::size_t x) {  // col y -= q * col x
    for (std::size_t i = 0; i < rows; ++i) a[i][y] -= q * a[i][x];
    if (track_right)
      for (std::size_t i = 0; i < cols; ++i) v[i][y] -= q * v[i][x];
  };

  SmithForm s;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        if (pi == rows || abs(a[i][j]) < abs(a[pi][pj])) {
          pi = i;
          pj = j;
        }
      }
    if (pi == rows) break;
    std::swap(a[t], a[pi]);
    swap_cols(t, pj);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        BigInt q = big_floor_div(a[i][t], a[t][t]);
        if (q != 0)
          for (std::size_t c = t; c < cols; ++c) a[i][c] -= q * a[t][c];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        BigInt q = big_floor_div(a[t][j], a[t][t]);
        if (q != 0) col_sub(j, q, t);
        if (a[t][j] != 0) {
          swap_cols(t, j);
          dirty = true;
        }
      }
      if (!dirty) {
        for (std::size_t i = t + 1; i < rows && !dirty; ++i)
          for (std::size_t j = t + 1; j < cols && !dirty; ++j)
            if (a[i][j] % a[t][t] != 0) {
              for (std::size_t c = t; c < cols; ++c) a[t][c] += a[i][c];
              dirty = true;
            }
      }
    }
    if (a[t][t] < 0)
      for (std::size_t c = t; c < cols; ++c) a[t][c] = -a[t][c];
    s.factors.push_back(a[t][t]);
    ++t;
  }
  s.right = std::move(v);
  return s;
}

}  // namespace vass
