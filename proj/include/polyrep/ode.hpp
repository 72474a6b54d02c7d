#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "polyrep/skeleton.hpp"

namespace polyrep {

struct IntegrationControl {
  double rel_tol = 1e-11;
  double abs_tol = 1e-14;
  double initial_step = 1e-3;
  double max_step = 1.0;
  double min_step = 1e-13;
  long max_steps = 50'000'000;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<VecD> states;
  std::vector<double> h;                    // Hamiltonian audit (NaN off-interior)
  std::vector<std::vector<double>> h_w;     // casimir audits
  std::vector<std::vector<double>> group_sums;
  bool step_underflow = false;
};

/// Adaptive Dormand-Prince integration of the replicator field with
/// per-step group-sum renormalization and conserved-quantity audit columns.
Trajectory integrate(const GameSpec& g, const VecD& x0, double t_end,
                     const IntegrationControl& ctrl, const HamiltonianSpec* hs,
                     const std::vector<VecQ>* casimirs, int record_every = 1);

/// The eps-rescaling chart at a vertex: y_s = -eps^2 log(f_s / delta) on the
/// facets through the vertex, 0 elsewhere.
struct RescaleChart {
  int vertex = -1;
  double eps = 0.25;
  double delta = 0.1;
};

/// Forward rescale of a state; throws std::domain_error at the boundary
/// (saturated coordinate).
VecD rescale_forward(const GameSpec& g, const CellComplex& cells,
                     const RescaleChart& chart, const VecD& x);

/// Inverse: reconstructs the state from y in int(Pi_v) via
/// f_s = delta exp(-y_s/eps^2) and group-sum closure.
VecD rescale_inverse(const GameSpec& g, const CellComplex& cells,
                     const RescaleChart& chart, const VecD& y);

enum class PoincareStatus { kOk, kEscaped, kEventTimeout, kStepUnderflow };

struct PoincareResult {
  PoincareStatus status = PoincareStatus::kOk;
  VecD y;                       // rescaled exit point (valid when kOk)
  std::vector<int> vertex_itinerary;  // vertices whose tubes were traversed
};

/// Numerical Poincare map F_xi^eps along a heteroclinic path: seeds the ODE
/// at the inverse-rescaled entry section, integrates through the tube
/// cross-sections (event detection: cubic dense output + bisection to
/// |f - delta| < 1e-12) and rescales the exit point.
PoincareResult numerical_poincare(const GameSpec& g, const CellComplex& cells,
                                  const Branch& branch, double eps, double delta,
                                  const VecQ& y0, const IntegrationControl& ctrl);

struct ConvergenceRow {
  double eps;
  int sample;
  double sup_error;            // ||F_xi^eps(y) - pi_xi(y)||_inf
  PoincareStatus status;
  bool itinerary_ok;
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  std::vector<VecQ> samples;
  bool monotone = false;       // errors weakly decreasing in eps, per sample
  bool all_ok = false;
};

/// Error table of the numerical Poincare map against the skeleton branch map
/// over a grid of eps values; samples must lie in the branch cone.
ConvergenceTable convergence_study(const GameSpec& g, const CellComplex& cells,
                                   const Branch& branch, const std::vector<double>& epsilons,
                                   const std::vector<VecQ>& samples, double delta,
                                   const IntegrationControl& ctrl);

/// Deterministic interior samples of a branch cone: normalized so
/// ||y||_inf = 1 with every cone inequality margin >= `margin`.
std::vector<VecQ> sample_branch_cone(const Branch& branch, int count, double margin,
                                     uint64_t seed);

}  // namespace polyrep
