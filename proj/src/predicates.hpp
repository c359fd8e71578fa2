// Licensed under the Apache License 2.0 (see LICENSE file).

// Orientation and in-sphere signs for 2D/3D points. A floating-point
// evaluation is accepted when it clears a permanent-based error bound;
// otherwise the determinant is recomputed exactly over GMP rationals, which
// represent every double input exactly.

#ifndef STABLEVOL_PREDICATES_HPP
#define STABLEVOL_PREDICATES_HPP

#include <array>
#include <cmath>

#include <gmpxx.h>

#include "stablevol/alpha.hpp"

namespace stablevol::predicates {

template <typename T, std::size_t N>
using Matrix = std::array<std::array<T, N>, N>;

template <typename T, std::size_t N>
T determinant(const Matrix<T, N>& m) {
  if constexpr (N == 1) {
    return m[0][0];
  } else if constexpr (N == 2) {
    return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  } else {
    T sum = 0;
    for (std::size_t col = 0; col < N; ++col) {
      Matrix<T, N - 1> minor{};
      for (std::size_t r = 1; r < N; ++r) {
        std::size_t cc = 0;
        for (std::size_t c = 0; c < N; ++c) {
          if (c == col) continue;
          minor[r - 1][cc++] = m[r][c];
        }
      }
      T term = m[0][col] * determinant<T, N - 1>(minor);
      if (col % 2 == 0)
        sum += term;
      else
        sum -= term;
    }
    return sum;
  }
}

template <std::size_t N>
double permanent_abs(const Matrix<double, N>& m) {
  if constexpr (N == 1) {
    return std::fabs(m[0][0]);
  } else {
    double sum = 0;
    for (std::size_t col = 0; col < N; ++col) {
      Matrix<double, N - 1> minor{};
      for (std::size_t r = 1; r < N; ++r) {
        std::size_t cc = 0;
        for (std::size_t c = 0; c < N; ++c) {
          if (c == col) continue;
          minor[r - 1][cc++] = m[r][c];
        }
      }
      sum += std::fabs(m[0][col]) * permanent_abs<N - 1>(minor);
    }
    return sum;
  }
}

inline int sign_of(const mpq_class& v) { return sgn(v); }

/// Sign of det[p1 - p0, ..., pD - p0].
template <std::size_t D>
int orient(const std::array<const Point*, D + 1>& p) {
  Matrix<double, D> m{};
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = 0; j < D; ++j) m[i][j] = (*p[i + 1])[j] - (*p[0])[j];
  double det = determinant<double, D>(m);
  double bound = 1e-12 * permanent_abs<D>(m);
  if (det > bound) return 1;
  if (det < -bound) return -1;
  Matrix<mpq_class, D> e{};
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = 0; j < D; ++j)
      e[i][j] = mpq_class((*p[i + 1])[j]) - mpq_class((*p[0])[j]);
  return sign_of(determinant<mpq_class, D>(e));
}

/// Positive when q lies strictly inside the circumsphere of the positively
/// oriented simplex p, negative when strictly outside, 0 when cospherical.
template <std::size_t D>
int in_sphere(const std::array<const Point*, D + 1>& p, const Point& q) {
  constexpr std::size_t N = D + 1;
  Matrix<double, N> m{};
  for (std::size_t i = 0; i < N; ++i) {
    double sq = 0;
    for (std::size_t j = 0; j < D; ++j) {
      m[i][j] = (*p[i])[j] - q[j];
      sq += m[i][j] * m[i][j];
    }
    m[i][D] = sq;
  }
  // det[p_i - q, |p_i - q|^2] is positive for "inside" in 2D, negative in 3D.
  constexpr int inside_sign = (D == 2) ? 1 : -1;
  double det = determinant<double, N>(m);
  double bound = 1e-12 * permanent_abs<N>(m);
  if (det > bound) return inside_sign;
  if (det < -bound) return -inside_sign;
  Matrix<mpq_class, N> e{};
  for (std::size_t i = 0; i < N; ++i) {
    mpq_class sq = 0;
    for (std::size_t j = 0; j < D; ++j) {
      e[i][j] = mpq_class((*p[i])[j]) - mpq_class(q[j]);
      sq += e[i][j] * e[i][j];
    }
    e[i][D] = sq;
  }
  return inside_sign * sign_of(determinant<mpq_class, N>(e));
}

}  // namespace stablevol::predicates

#endif  // STABLEVOL_PREDICATES_HPP
