#pragma once

// Exact linear algebra over Z and Q. Integer routines use Bareiss
// fraction-free elimination; rational routines use plain Gauss-Jordan
// on reduced fractions. Nothing here tolerates or produces rounding.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <utility>

#include "mvstate/rational.hpp"

namespace mvstate::linalg {

namespace detail {

inline Integer checked_narrow(__int128 v) {
  if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
    throw Error("integer overflow in exact elimination");
  return static_cast<Integer>(v);
}

// Bareiss elimination in place; returns the rank and the last nonzero
// leading minor (up to sign) through `det` when the matrix is square.
inline std::size_t bareiss(IntMatrix& m, Integer* det = nullptr) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  Integer prev = 1;
  int sign = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      std::swap(m[pivot], m[rank]);
      sign = -sign;
    }
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        __int128 num = static_cast<__int128>(m[r][c]) * m[rank][col] -
                       static_cast<__int128>(m[r][col]) * m[rank][c];
        m[r][c] = checked_narrow(num / prev);
      }
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  if (det) *det = (rank == rows && rows == cols) ? sign * prev : 0;
  return rank;
}

}  // namespace detail

inline std::size_t rank(IntMatrix m) { return detail::bareiss(m); }

inline Integer determinant(IntMatrix m) {
  if (m.empty()) return 1;
  if (m.size() != m[0].size()) throw DimensionMismatch("determinant of a non-square matrix");
  Integer det = 0;
  detail::bareiss(m, &det);
  return det;
}

inline IntMatrix transpose(const IntMatrix& m) {
  if (m.empty()) return {};
  IntMatrix t(m[0].size(), IntVector(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m[r].size(); ++c) t[c][r] = m[r][c];
  return t;
}

/// gcd of all r x r minors of an r x c integer matrix (r <= c). Equal to 1
/// exactly when the rows extend to a basis of Z^c.
inline Integer gcd_of_maximal_minors(const IntMatrix& m) {
  const std::size_t r = m.size();
  if (r == 0) return 1;
  const std::size_t c = m[0].size();
  if (r > c) return 0;
  std::vector<bool> pick(c, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(r), true);
  Integer g = 0;
  do {
    IntMatrix minor(r, IntVector());
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (pick[j]) minor[i].push_back(m[i][j]);
    g = std::gcd(g, determinant(std::move(minor)));
    if (g == 1) break;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return g < 0 ? -g : g;
}

/// Rank over Q.
inline std::size_t rank(RatMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t rk = 0;
  for (std::size_t col = 0; col < cols && rk < rows; ++col) {
    std::size_t pivot = rk;
    while (pivot < rows && m[pivot][col].numerator() == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rk]);
    for (std::size_t r = rk + 1; r < rows; ++r) {
      if (m[r][col].numerator() == 0) continue;
      Rational f = m[r][col] / m[rk][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rk][c];
    }
    ++rk;
  }
  return rk;
}

struct Solution {
  bool consistent = false;
  bool unique = false;
  RatVector x;  // one particular solution when consistent (free variables = 0)
};

/// Solves a x = b exactly.
inline Solution solve(RatMatrix a, RatVector b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  if (b.size() != rows) throw DimensionMismatch("solve: right-hand side length");
  std::vector<std::size_t> pivot_cols;
  std::size_t rk = 0;
  for (std::size_t col = 0; col < cols && rk < rows; ++col) {
    std::size_t pivot = rk;
    while (pivot < rows && a[pivot][col].numerator() == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rk]);
    std::swap(b[pivot], b[rk]);
    Rational inv = Rational(1) / a[rk][col];
    for (std::size_t c = col; c < cols; ++c) a[rk][c] *= inv;
    b[rk] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rk || a[r][col].numerator() == 0) continue;
      Rational f = a[r][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[rk][c];
      b[r] -= f * b[rk];
    }
    pivot_cols.push_back(col);
    ++rk;
  }
  Solution out;
  for (std::size_t r = rk; r < rows; ++r)
    if (b[r].numerator() != 0) return out;
  out.consistent = true;
  out.unique = rk == cols;
  out.x.assign(cols, Rational(0));
  for (std::size_t i = 0; i < rk; ++i) out.x[pivot_cols[i]] = b[i];
  return out;
}

}  // namespace mvstate::linalg
