#pragma once

// Dense linear algebra over an arbitrary scalar. With Scalar = Rational every
// routine is exact and the tolerance argument is ignored (zero means zero);
// with Scalar = double the tolerance decides what counts as zero.

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "pba/rational.hpp"

namespace pba::linalg {

template <typename Scalar>
bool is_zero(const Scalar& x, double tol) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    (void)tol;
    return x == 0;
  } else {
    return std::abs(x) <= tol;
  }
}

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return boost::multiprecision::abs(x);
  } else {
    return std::abs(x);
  }
}

template <typename Scalar>
struct RowEchelon {
  Matrix<Scalar> reduced;                // reduced row echelon form
  std::vector<Eigen::Index> pivot_cols;  // one per nonzero row
};

/// Gauss-Jordan elimination. For doubles, partial pivoting on the largest
/// magnitude entry; for rationals, the first nonzero entry.
template <typename Scalar>
RowEchelon<Scalar> row_echelon(Matrix<Scalar> m, double tol = 1e-12) {
  RowEchelon<Scalar> out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    if constexpr (std::is_same_v<Scalar, Rational>) {
      for (Eigen::Index r = row; r < m.rows(); ++r)
        if (m(r, col) != 0) {
          pivot = r;
          break;
        }
    } else {
      double best = tol;
      for (Eigen::Index r = row; r < m.rows(); ++r)
        if (std::abs(m(r, col)) > best) {
          best = std::abs(m(r, col));
          pivot = r;
        }
    }
    if (pivot < 0) continue;
    m.row(pivot).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col), 0.0)) continue;
      const Scalar factor = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <typename Scalar>
Eigen::Index rank(const Matrix<Scalar>& m, double tol = 1e-12) {
  return static_cast<Eigen::Index>(row_echelon(m, tol).pivot_cols.size());
}

/// Basis of {x : m x = 0}, one column per free variable.
template <typename Scalar>
Matrix<Scalar> nullspace(const Matrix<Scalar>& m, double tol = 1e-12) {
  const auto ech = row_echelon(m, tol);
  const Eigen::Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto c : ech.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < n; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);

  Matrix<Scalar> basis = Matrix<Scalar>::Zero(n, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const auto f = free_cols[k];
    const auto col = static_cast<Eigen::Index>(k);
    basis(f, col) = Scalar(1);
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r)
      basis(ech.pivot_cols[r], col) = -ech.reduced(static_cast<Eigen::Index>(r), f);
  }
  return basis;
}

/// A maximal linearly independent subset of the columns, in order.
template <typename Scalar>
Matrix<Scalar> independent_columns(const Matrix<Scalar>& m, double tol = 1e-12) {
  const auto ech = row_echelon(m, tol);
  Matrix<Scalar> out(m.rows(), static_cast<Eigen::Index>(ech.pivot_cols.size()));
  for (std::size_t k = 0; k < ech.pivot_cols.size(); ++k)
    out.col(static_cast<Eigen::Index>(k)) = m.col(ech.pivot_cols[k]);
  return out;
}

/// Exact membership of v in the column span of basis.
inline bool in_column_span(const RationalMatrix& basis, const RationalVector& v) {
  if (basis.cols() == 0) return v.isZero();
  RationalMatrix aug(basis.rows(), basis.cols() + 1);
  aug << basis, v;
  return rank<Rational>(aug) == rank<Rational>(basis);
}

// ---------------------------------------------------------------------------
// Floating subspaces, kept as matrices with orthonormal columns.

/// Adds v to the orthonormal set q if its component orthogonal to span(q)
/// exceeds tol relative to |v|. Two passes of Gram-Schmidt.
inline bool extend_orthonormal(Matrix<double>& q, Vector<double> v, double tol) {
  const double norm = v.norm();
  if (norm == 0.0) return false;
  for (int pass = 0; pass < 2; ++pass)
    if (q.cols() > 0) v -= q * (q.transpose() * v);
  const double residual = v.norm();
  if (residual <= tol * norm) return false;
  q.conservativeResize(v.size(), q.cols() + 1);
  q.col(q.cols() - 1) = v / residual;
  return true;
}

inline Matrix<double> orthonormal_basis(const Matrix<double>& columns, double tol) {
  Matrix<double> q(columns.rows(), 0);
  for (Eigen::Index c = 0; c < columns.cols(); ++c)
    extend_orthonormal(q, columns.col(c), tol);
  return q;
}

/// Orthonormal basis of the orthogonal complement of span(inner) inside span(outer).
inline Matrix<double> complement_within(const Matrix<double>& outer,
                                        const Matrix<double>& inner, double tol) {
  Matrix<double> q = inner;
  const Eigen::Index start = q.cols();
  for (Eigen::Index c = 0; c < outer.cols(); ++c) extend_orthonormal(q, outer.col(c), tol);
  return q.rightCols(q.cols() - start);
}

/// Largest sine of the principal angles between two subspaces given by
/// orthonormal bases; 0 when they coincide. Infinity when dimensions differ.
inline double subspace_distance(const Matrix<double>& a, const Matrix<double>& b) {
  if (a.cols() != b.cols()) return std::numeric_limits<double>::infinity();
  if (a.cols() == 0) return 0.0;
  const Matrix<double> residual = b - a * (a.transpose() * b);
  Eigen::JacobiSVD<Matrix<double>> svd(residual);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

// ---------------------------------------------------------------------------
// Phase-one simplex: is there z >= 0 with a z = b?

/// Bland's rule keeps the iteration finite; with Scalar = Rational the answer
/// is exact.
template <typename Scalar>
bool nonnegative_solution_exists(Matrix<Scalar> a, Vector<Scalar> b, double tol = 1e-10) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  if (m == 0) return true;
  for (Eigen::Index i = 0; i < m; ++i)
    if (b(i) < Scalar(0)) {
      a.row(i) = -a.row(i);
      b(i) = -b(i);
    }

  // Tableau columns: n structural, m artificial, 1 right-hand side.
  Matrix<Scalar> t = Matrix<Scalar>::Zero(m + 1, n + m + 1);
  t.topLeftCorner(m, n) = a;
  for (Eigen::Index i = 0; i < m; ++i) t(i, n + i) = Scalar(1);
  t.col(n + m).head(m) = b;
  // Objective row: minimise the sum of artificials, expressed in non-basic terms.
  for (Eigen::Index i = 0; i < m; ++i) t.row(m) -= t.row(i);
  for (Eigen::Index i = 0; i < m; ++i) t(m, n + i) = Scalar(0);

  std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = n + i;

  const auto negative = [&](const Scalar& x) {
    if constexpr (std::is_same_v<Scalar, Rational>) return x < 0;
    else return x < -tol;
  };
  const auto positive = [&](const Scalar& x) {
    if constexpr (std::is_same_v<Scalar, Rational>) return x > 0;
    else return x > tol;
  };

  const std::size_t max_steps = 50 * static_cast<std::size_t>(n + m + 1) + 1000;
  for (std::size_t step = 0; step < max_steps; ++step) {
    Eigen::Index entering = -1;
    for (Eigen::Index j = 0; j < n + m; ++j)
      if (negative(t(m, j))) {
        entering = j;
        break;
      }
    if (entering < 0) break;

    Eigen::Index leaving = -1;
    Scalar best_ratio{};
    for (Eigen::Index i = 0; i < m; ++i) {
      if (!positive(t(i, entering))) continue;
      const Scalar ratio = t(i, n + m) / t(i, entering);
      if (leaving < 0 || ratio < best_ratio ||
          (ratio == best_ratio &&
           basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leaving)])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving < 0) break;  // unbounded direction; cannot happen in phase one

    const Scalar inv = Scalar(1) / t(leaving, entering);
    t.row(leaving) *= inv;
    for (Eigen::Index i = 0; i <= m; ++i) {
      if (i == leaving || is_zero(t(i, entering), 0.0)) continue;
      const Scalar factor = t(i, entering);
      t.row(i) -= factor * t.row(leaving);
    }
    basis[static_cast<std::size_t>(leaving)] = entering;
  }

  // Optimal value of the sum of artificials is -t(m, rhs).
  const Scalar infeasibility = -t(m, n + m);
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return infeasibility == 0;
  } else {
    double scale = 1.0;
    for (Eigen::Index i = 0; i < m; ++i) scale = std::max(scale, std::abs(b(i)));
    return infeasibility <= tol * scale;
  }
}

}  // namespace pba::linalg
