#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyrep/game.hpp"

namespace polyrep {

/// Solution set of the formal-equilibrium equations
///   (A q)_i = (A q)_j within each group,  sum_{[a]} q = 1.
struct FormalEquilibriumSet {
  bool exists = false;
  VecQ particular;           // free variables of the linear system set to 0
  std::vector<VecQ> kernel;  // basis of the homogeneous solution space
  bool interior_exists = false;
  VecQ interior;             // margin-maximizing interior representative, if any
  Rat interior_margin;       // min coordinate of `interior`
};

FormalEquilibriumSet formal_equilibria(const GameSpec& g);

/// A ~ A0 D with A0 skew and D = diag(lambda_a I_{n_a}).
struct SkewDecomposition {
  MatQ a0;
  std::vector<Rat> lambda;
};

/// D = diag(lambda_a I_{n_a}) for a given game.
MatQ scaling_matrix(const GameSpec& g, const std::vector<Rat>& lambda);

/// Search for a skew decomposition (empty optional if none exists).
std::optional<SkewDecomposition> skew_decomposition_find(const GameSpec& g);

/// Check all invariants of a claimed decomposition; returns the first
/// violated invariant as text, or empty string when valid.
std::string skew_decomposition_verify(const GameSpec& g, const SkewDecomposition& sd);

/// Data of the Hamiltonian h(x) = sum_b lambda_b sum_{j in [b]} q_j log x_j.
struct HamiltonianSpec {
  VecQ q;
  std::vector<Rat> lambda;
  /// c_i = lambda_{group(i)} q_i.
  VecQ coefficients(const GameSpec& g) const;
};

/// h at a strictly interior point (binary64; coefficients stay exact).
/// Throws std::domain_error on the boundary.
double hamiltonian_eval(const GameSpec& g, const HamiltonianSpec& hs, const VecQ& x);

/// The quadratic Poisson tensor -T_x D_x A0 D_x T_x^t at an interior point.
MatQ poisson_field_at(const GameSpec& g, const SkewDecomposition& sd, const VecQ& x);

/// Rational basis of Ker(A) intersected with the zero-group-sum subspace;
/// vectors are primitive integer, last nonzero entry positive.
std::vector<VecQ> casimir_basis(const GameSpec& g);

/// Full conservativity verdict for reports.
struct ConservativityRecord {
  bool conservative = false;
  FormalEquilibriumSet equilibria;
  std::optional<SkewDecomposition> skew;
  std::vector<VecQ> casimirs;
  int kernel_dim = 0;  // dim Ker(A)
};

ConservativityRecord analyze_conservativity(const GameSpec& g);

}  // namespace polyrep
