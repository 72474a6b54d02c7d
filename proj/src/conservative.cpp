#include "polyrep/conservative.hpp"

#include <cmath>
#include <stdexcept>

#include "polyrep/linalg.hpp"
#include "polyrep/lp.hpp"

namespace polyrep {
namespace {

// Rows of the linear system (A q) constant per group, group sums free.
MatQ equilibrium_lhs(const GameSpec& g) {
  const int n = g.num_strategies();
  int diff_rows = 0;
  for (int a = 0; a < g.num_groups(); ++a) diff_rows += g.groups()[a] - 1;
  MatQ lhs(diff_rows + g.num_groups(), n);
  int r = 0;
  for (int a = 0; a < g.num_groups(); ++a)
    for (int i = g.group_begin(a); i + 1 < g.group_end(a); ++i)
      lhs.row(r++) = g.payoff().row(i) - g.payoff().row(i + 1);
  for (int a = 0; a < g.num_groups(); ++a) {
    lhs.row(r).setZero();
    for (int i = g.group_begin(a); i < g.group_end(a); ++i) lhs(r, i) = 1;
    ++r;
  }
  return lhs;
}

}  // namespace

FormalEquilibriumSet formal_equilibria(const GameSpec& g) {
  const int n = g.num_strategies();
  MatQ lhs = equilibrium_lhs(g);
  VecQ rhs = VecQ::Zero(lhs.rows());
  for (int a = 0; a < g.num_groups(); ++a)
    rhs[lhs.rows() - g.num_groups() + a] = 1;

  FormalEquilibriumSet out;
  auto particular = solve_particular<Rat>(lhs, rhs);
  if (!particular) return out;
  out.exists = true;
  out.particular = *particular;
  MatQ kernel = kernel_basis<Rat>(lhs);
  for (Eigen::Index k = 0; k < kernel.cols(); ++k)
    out.kernel.push_back(primitive_integer(kernel.col(k)));

  // Interior representative: maximize the margin delta with
  // particular + K t >= delta over the affine solution set.
  const int kdim = (int)out.kernel.size();
  MatQ ge(n + 1, kdim + 1);
  VecQ ge_rhs(n + 1);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < kdim; ++k) ge(i, k) = out.kernel[(size_t)k][i];
    ge(i, kdim) = -1;
    ge_rhs[i] = -out.particular[i];
  }
  ge.row(n).setZero();
  ge(n, kdim) = -1;  // delta <= 1
  ge_rhs[n] = -1;
  VecQ objective = VecQ::Zero(kdim + 1);
  objective[kdim] = 1;
  auto sol = lp_solve(objective, ge, ge_rhs, MatQ(0, kdim + 1), VecQ(0));
  if (sol.status == LpStatus::kOptimal && sol.value > 0) {
    out.interior_exists = true;
    out.interior_margin = sol.value;
    out.interior = out.particular;
    for (int k = 0; k < kdim; ++k)
      out.interior += sol.x[k] * out.kernel[(size_t)k];
  }
  return out;
}

MatQ scaling_matrix(const GameSpec& g, const std::vector<Rat>& lambda) {
  const int n = g.num_strategies();
  MatQ d = MatQ::Zero(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = lambda[(size_t)g.group_of(i)];
  return d;
}

std::string skew_decomposition_verify(const GameSpec& g, const SkewDecomposition& sd) {
  const int n = g.num_strategies();
  if (sd.a0.rows() != n || sd.a0.cols() != n) return "A0 has wrong order";
  if ((int)sd.lambda.size() != g.num_groups()) return "lambda has wrong length";
  for (const Rat& l : sd.lambda)
    if (l == 0) return "lambda has a zero entry";
  if (!all_zero(sd.a0.transpose() + sd.a0)) return "A0 is not skew-symmetric";
  if (!equal_rows_equivalent(g.payoff(), sd.a0 * scaling_matrix(g, sd.lambda), g))
    return "A0 D does not induce the same field as A";
  return "";
}

std::optional<SkewDecomposition> skew_decomposition_find(const GameSpec& g) {
  const int n = g.num_strategies();
  const int p = g.num_groups();

  // A already skew: accept itself with unit scaling.
  if (all_zero(g.payoff().transpose() + g.payoff())) {
    SkewDecomposition sd;
    sd.a0 = g.payoff();
    sd.lambda.assign((size_t)p, Rat(1));
    return sd;
  }

  // Unknowns: lambda_a (p of them), then d^{a,b}_j for each block (a,b)
  // and column j in [b]. Skewness linearizes to
  //   lambda_a a_ij + lambda_b a_ji = d^{ab}_j + d^{ba}_i.
  std::vector<int> block_offset((size_t)(p * p), 0);
  int nvars = p;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) {
      block_offset[(size_t)(a * p + b)] = nvars;
      nvars += g.groups()[b];
    }
  auto d_index = [&](int a, int b, int j) {
    return block_offset[(size_t)(a * p + b)] + (j - g.group_begin(b));
  };

  MatQ sys(n * (n + 1) / 2, nvars);
  sys.setZero();
  int r = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int a = g.group_of(i), b = g.group_of(j);
      sys(r, a) += g.payoff()(i, j);
      sys(r, b) += g.payoff()(j, i);
      sys(r, d_index(a, b, j)) -= 1;
      sys(r, d_index(b, a, i)) -= 1;
      ++r;
    }

  MatQ kernel = kernel_basis<Rat>(sys);
  const int kdim = (int)kernel.cols();
  if (kdim == 0) return std::nullopt;
  for (int a = 0; a < p; ++a) {
    bool possible = false;
    for (int k = 0; k < kdim; ++k)
      if (kernel(a, k) != 0) possible = true;
    if (!possible) return std::nullopt;  // lambda_a vanishes on every solution
  }
  // A combination sum t^k basis_k has each lambda_a(t) a nonzero polynomial
  // of degree < kdim, so small integer t values must contain a witness.
  for (int t = 1; t <= kdim * p + 1; ++t) {
    VecQ u = VecQ::Zero(nvars);
    Rat power = 1;
    for (int k = 0; k < kdim; ++k) {
      u += power * kernel.col(k);
      power *= t;
    }
    bool all_nonzero = true;
    for (int a = 0; a < p; ++a)
      if (u[a] == 0) all_nonzero = false;
    if (!all_nonzero) continue;

    SkewDecomposition sd;
    sd.lambda.assign((size_t)p, Rat(0));
    for (int a = 0; a < p; ++a) sd.lambda[(size_t)a] = u[a];
    sd.a0 = MatQ::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int a = g.group_of(i), b = g.group_of(j);
        Rat c_ab_j = u[d_index(a, b, j)] / u[a];
        sd.a0(i, j) = (g.payoff()(i, j) - c_ab_j) / u[b];
      }
    if (skew_decomposition_verify(g, sd).empty()) return sd;
  }
  return std::nullopt;
}

VecQ HamiltonianSpec::coefficients(const GameSpec& g) const {
  VecQ c(g.num_strategies());
  for (int i = 0; i < g.num_strategies(); ++i)
    c[i] = lambda[(size_t)g.group_of(i)] * q[i];
  return c;
}

double hamiltonian_eval(const GameSpec& g, const HamiltonianSpec& hs, const VecQ& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x[i] <= 0)
      throw std::domain_error("Hamiltonian undefined on the polytope boundary");
  VecQ c = hs.coefficients(g);
  double value = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (c[i] != 0) value += c[i].get_d() * std::log(x[i].get_d());
  return value;
}

MatQ poisson_field_at(const GameSpec& g, const SkewDecomposition& sd, const VecQ& x) {
  const int n = g.num_strategies();
  MatQ t = MatQ::Zero(n, n);
  for (int a = 0; a < g.num_groups(); ++a)
    for (int i = g.group_begin(a); i < g.group_end(a); ++i)
      for (int j = g.group_begin(a); j < g.group_end(a); ++j)
        t(i, j) = x[i] - Rat(i == j ? 1 : 0);
  MatQ dx = MatQ::Zero(n, n);
  for (int i = 0; i < n; ++i) dx(i, i) = x[i];
  return -(t * dx * sd.a0 * dx * t.transpose());
}

std::vector<VecQ> casimir_basis(const GameSpec& g) {
  const int n = g.num_strategies();
  MatQ sys(n + g.num_groups(), n);
  sys.topRows(n) = g.payoff();
  sys.bottomRows(g.num_groups()).setZero();
  for (int a = 0; a < g.num_groups(); ++a)
    for (int i = g.group_begin(a); i < g.group_end(a); ++i)
      sys(n + a, i) = 1;
  MatQ kernel = kernel_basis<Rat>(sys);
  std::vector<VecQ> out;
  for (Eigen::Index k = 0; k < kernel.cols(); ++k)
    out.push_back(primitive_integer(kernel.col(k)));
  return out;
}

ConservativityRecord analyze_conservativity(const GameSpec& g) {
  ConservativityRecord rec;
  rec.equilibria = formal_equilibria(g);
  rec.skew = skew_decomposition_find(g);
  rec.conservative = rec.equilibria.exists && rec.skew.has_value();
  rec.casimirs = casimir_basis(g);
  rec.kernel_dim = g.num_strategies() - (int)rank<Rat>(g.payoff());
  return rec;
}

}  // namespace polyrep
