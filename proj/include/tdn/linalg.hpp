#pragma once

#include "tdn/rational.hpp"

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>

namespace tdn {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatQ = Mat<Rational>;
using VecQ = Vec<Rational>;
using MatZ = Mat<std::int64_t>;
using VecZ = Vec<std::int64_t>;

namespace detail {

inline std::int64_t exact_div(std::int64_t a, std::int64_t b) {
  if (b == 0 || a % b != 0) throw std::domain_error("Bareiss step not exact");
  return a / b;
}

inline std::int64_t mul_sub(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  __int128 v = static_cast<__int128>(a) * b - static_cast<__int128>(c) * d;
  return static_cast<std::int64_t>(v);
}

}  // namespace detail

// Row echelon form by exact elimination; returns the rank. Field scalars divide,
// integer scalars use fraction-free (Bareiss) steps.
template <typename Scalar>
int rank(Mat<Scalar> m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  Scalar prev_pivot(1);
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = r;
    while (piv < rows && m(piv, c) == Scalar(0)) ++piv;
    if (piv == rows) continue;
    m.row(r).swap(m.row(piv));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      if constexpr (std::is_same_v<Scalar, std::int64_t>) {
        for (Eigen::Index j = c + 1; j < cols; ++j)
          m(i, j) = detail::exact_div(detail::mul_sub(m(r, c), m(i, j), m(i, c), m(r, j)), prev_pivot);
        m(i, c) = 0;
      } else {
        if (m(i, c) == Scalar(0)) continue;
        Scalar f = m(i, c) / m(r, c);
        for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
      }
    }
    if constexpr (std::is_same_v<Scalar, std::int64_t>) prev_pivot = m(r, c);
    ++r;
  }
  return static_cast<int>(r);
}

// Exact determinant of a square matrix.
template <typename Scalar>
Scalar determinant(Mat<Scalar> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const Eigen::Index n = m.rows();
  Scalar sign(1), prev_pivot(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = c;
    while (piv < n && m(piv, c) == Scalar(0)) ++piv;
    if (piv == n) return Scalar(0);
    if (piv != c) {
      m.row(c).swap(m.row(piv));
      sign = -sign;
    }
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if constexpr (std::is_same_v<Scalar, std::int64_t>) {
        for (Eigen::Index j = c + 1; j < n; ++j)
          m(i, j) = detail::exact_div(detail::mul_sub(m(c, c), m(i, j), m(i, c), m(c, j)), prev_pivot);
        m(i, c) = 0;
      } else {
        if (m(i, c) == Scalar(0)) continue;
        Scalar f = m(i, c) / m(c, c);
        for (Eigen::Index j = c; j < n; ++j) m(i, j) -= f * m(c, j);
      }
    }
    if constexpr (std::is_same_v<Scalar, std::int64_t>) prev_pivot = m(c, c);
  }
  if constexpr (std::is_same_v<Scalar, std::int64_t>) return sign * m(n - 1, n - 1);
  Scalar det = sign;
  for (Eigen::Index i = 0; i < n; ++i) det *= m(i, i);
  return det;
}

// Inverse over the rationals; std::nullopt for singular input.
inline std::optional<MatQ> inverse(const MatQ& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const Eigen::Index n = a.rows();
  MatQ m(n, 2 * n);
  m.leftCols(n) = a;
  m.rightCols(n) = MatQ::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return std::nullopt;
    m.row(c).swap(m.row(piv));
    Rational inv = 1 / m(c, c);
    m.row(c) *= inv;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == c || m(i, c) == 0) continue;
      Rational f = m(i, c);
      m.row(i) -= f * m.row(c);
    }
  }
  return MatQ(m.rightCols(n));
}

template <typename Scalar>
MatQ to_rational(const Mat<Scalar>& m) {
  MatQ out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

}  // namespace tdn
