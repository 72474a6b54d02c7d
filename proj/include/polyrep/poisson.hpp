#pragma once

#include <string>
#include <vector>

#include "polyrep/skeleton.hpp"

namespace polyrep {

/// Constant Poisson structure on the sector of a vertex: B_v = E_v A0 E_v^t
/// in the chart (y_s)_{s in F_v}, facets ascending.
struct SectorPoisson {
  int vertex = -1;
  MatQ e;      // (n-p) x n
  MatQ b;      // (n-p) x (n-p), skew
};

SectorPoisson sector_poisson(const GameSpec& g, const CellComplex& cells,
                             const SkewDecomposition& sd, int vertex);

/// chi^v == B_v grad(eta_v) at every vertex; per-vertex verdicts.
std::vector<bool> check_skeleton_hamiltonian(const GameSpec& g, const CellComplex& cells,
                                             const CharacterTable& ct,
                                             const HamiltonianSpec& hs,
                                             const SkewDecomposition& sd);

enum class ConstraintKind { kIncoming, kOutgoing };  // r / s

/// Dirac bracket matrix on a transversal section at a vertex, kept in the
/// full vertex chart with the constrained coordinate's row and column zero.
struct DiracStructure {
  int vertex = -1;
  ConstraintKind kind = ConstraintKind::kIncoming;
  int constrained_facet = -1;  // global facet index
  MatQ matrix;                 // (n-p) x (n-p) in the chart at `vertex`
  /// Ambient |F| x |F| embedding (zero rows/cols off the chart).
  MatQ ambient(const CellComplex& cells) const;
};

/// Closed-form Dirac matrix B_v - C; throws std::domain_error when the
/// corner character vanishes (constraint not second class).
DiracStructure dirac_matrix(const GameSpec& g, const CellComplex& cells,
                            const CharacterTable& ct, const HamiltonianSpec& hs,
                            const SectorPoisson& sp, ConstraintKind kind,
                            int constrained_facet);

/// Independent route: the generic two-constraint Dirac formula with the
/// 2x2 constraint-bracket inversion. Used to cross-validate dirac_matrix.
MatQ dirac_matrix_generic(const CharacterTable& ct, const CellComplex& cells,
                          const GameSpec& g, const HamiltonianSpec& hs,
                          const SectorPoisson& sp, int constrained_facet);

/// Affine chart change between the sectors of two adjacent vertices.
struct TransitionMap {
  int v_from = -1, v_to = -1;
  int group = -1;        // the changing group
  int r = -1, s = -1;    // strategy of v_from / of v_to in that group
  MatQ dp;               // (n-p) x (n-p) linear part between the two charts
  Rat t;                 // translation in the r-coordinate (symbolic)
};

/// Builds the map and verifies dP E_{v_from} = E_{v_to} exactly.
TransitionMap transition_map(const GameSpec& g, const CellComplex& cells,
                             int v_from, int v_to);

/// Result of the Poisson-map certification along one branch.
struct PathPoissonReport {
  bool ok = false;
  std::vector<bool> vertex_ok;   // per interior vertex: L pi_r L^t == pi_s
  std::vector<bool> matching_ok; // consecutive charts induce equal wall structures
  bool composed_ok = false;      // M pi_start M^t == pi_end (ambient)
  MatQ residual;                 // composed residual when it fails
};

PathPoissonReport verify_path_poisson(const GameSpec& g, const CellComplex& cells,
                                      const CharacterTable& ct, const HamiltonianSpec& hs,
                                      const SkewDecomposition& sd, const Branch& branch);

}  // namespace polyrep
