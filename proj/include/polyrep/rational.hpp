#pragma once

#include <gmpxx.h>
#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>

// Adapt GMP rationals as an Eigen scalar so the whole exact-arithmetic
// core can use ordinary dense Eigen types.

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

namespace internal {
template <>
inline mpq_class abs(const mpq_class& x) {
  return ::abs(x);
}
}  // namespace internal

}  // namespace Eigen

namespace polyrep {

using Rat = mpq_class;
using Int = mpz_class;

using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RowQ = Eigen::Matrix<Rat, 1, Eigen::Dynamic>;
using MatD = Eigen::MatrixXd;
using VecD = Eigen::VectorXd;

inline int sign(const Rat& x) { return sgn(x); }

inline double to_double(const Rat& x) { return x.get_d(); }

inline VecD to_double(const VecQ& v) {
  VecD out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v[i].get_d();
  return out;
}

inline MatD to_double(const MatQ& m) {
  MatD out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

inline bool all_zero(const MatQ& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

inline bool mat_equal(const MatQ& a, const MatQ& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && all_zero(a - b);
}

inline bool vec_equal(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

/// Canonical "p/q" (or plain "p" for integers).
inline std::string rat_str(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

/// Parse "p", "p/q" or a decimal string like "-0.25" or "1.5e-2" exactly.
Rat parse_rational(const std::string& text);

inline VecQ vecq(std::initializer_list<long> xs) {
  VecQ v((Eigen::Index)xs.size());
  Eigen::Index i = 0;
  for (long x : xs) v[i++] = x;
  return v;
}

}  // namespace polyrep
