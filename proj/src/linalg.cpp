#include "polyrep/linalg.hpp"

namespace polyrep {

VecQ primitive_integer(const VecQ& v) {
  Int lcm_den = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Rat c = v[i];
    c.canonicalize();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
  }
  VecQ w = v * Rat(lcm_den);
  Int g = 0;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    Rat c = w[i];
    c.canonicalize();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
  }
  if (g != 0) w /= Rat(g);
  for (Eigen::Index i = w.size() - 1; i >= 0; --i) {
    if (w[i] != 0) {
      if (w[i] < 0) w = -w;
      break;
    }
  }
  return w;
}

std::vector<Rat> char_poly(const MatQ& a) {
  // Faddeev-LeVerrier: c_n = 1, M_0 = 0.
  const Eigen::Index n = a.rows();
  std::vector<Rat> c((size_t)n + 1);
  c[(size_t)n] = 1;
  MatQ m = MatQ::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = a * m;
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) += c[(size_t)(n - k + 1)];
    Rat tr = 0;
    MatQ am = a * m;
    for (Eigen::Index i = 0; i < n; ++i) tr += am(i, i);
    c[(size_t)(n - k)] = -tr / Rat(k);
  }
  return c;
}

}  // namespace polyrep
