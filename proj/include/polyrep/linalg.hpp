#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "polyrep/rational.hpp"

// Exact dense linear algebra over an arbitrary field scalar (used with
// mpq_class). Gaussian elimination with leftmost-pivot selection, so
// particular solutions and kernel bases are deterministic.

namespace polyrep {

template <typename Scalar>
struct Rref {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> mat;
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index rank() const { return (Eigen::Index)pivot_cols.size(); }
};

/// Reduced row echelon form; pivots chosen leftmost-first, first nonzero row.
template <typename Scalar>
Rref<Scalar> rref(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    a.row(r) /= a(r, c);
    for (Eigen::Index i = 0; i < rows; ++i)
      if (i != r && a(i, c) != 0) a.row(i) -= a(i, c) * a.row(r);
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

template <typename Scalar>
Eigen::Index rank(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a) {
  return rref<Scalar>(a).rank();
}

/// Basis of the right kernel, one column per free variable (free variable
/// set to 1, remaining free variables 0), in ascending free-column order.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> kernel_basis(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  auto r = rref<Scalar>(a);
  const Eigen::Index cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat basis = Mat::Zero(cols, (Eigen::Index)free_cols.size());
  for (size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], (Eigen::Index)k) = 1;
    for (size_t i = 0; i < r.pivot_cols.size(); ++i)
      basis(r.pivot_cols[i], (Eigen::Index)k) = -r.mat((Eigen::Index)i, free_cols[k]);
  }
  return basis;
}

/// Particular solution of a x = b with free variables set to zero.
/// Empty optional when the system is inconsistent.
template <typename Scalar>
std::optional<Eigen::Matrix<Scalar, Eigen::Dynamic, 1>> solve_particular(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& b) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  Mat aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  auto r = rref<Scalar>(aug);
  for (auto c : r.pivot_cols)
    if (c == a.cols()) return std::nullopt;
  Vec x = Vec::Zero(a.cols());
  for (size_t i = 0; i < r.pivot_cols.size(); ++i)
    x[r.pivot_cols[i]] = r.mat((Eigen::Index)i, a.cols());
  return x;
}

/// Exact inverse; throws on singular input.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> inverse(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = a.rows();
  Mat aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = Mat::Identity(n, n);
  auto r = rref<Scalar>(aug);
  if (r.rank() < n || r.pivot_cols.back() >= n)
    throw std::invalid_argument("inverse: singular matrix");
  return r.mat.rightCols(n);
}

/// Scale a rational vector to a primitive integer vector; the last nonzero
/// entry is made positive. Zero vectors pass through.
VecQ primitive_integer(const VecQ& v);

/// Coefficients c_0..c_n of det(xI - a), exact (Faddeev-LeVerrier).
std::vector<Rat> char_poly(const MatQ& a);

}  // namespace polyrep
