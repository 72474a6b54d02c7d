#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyrep/cells.hpp"
#include "polyrep/conservative.hpp"

namespace polyrep {

/// chi(v, s): entry defined only when vertex v lies on facet s.
class CharacterTable {
 public:
  CharacterTable(int vertices, int facets)
      : defined_(vertices, std::vector<bool>(facets, false)),
        chi_(MatQ::Zero(vertices, facets)) {}

  bool defined(int v, int s) const { return defined_[v][s]; }
  const Rat& chi(int v, int s) const { return chi_(v, s); }
  void set(int v, int s, Rat value) {
    defined_[v][s] = true;
    chi_(v, s) = std::move(value);
  }
  /// chi^v as an ambient row (0 on undefined entries).
  RowQ row(int v) const { return chi_.row(v); }
  int num_vertices() const { return (int)defined_.size(); }
  int num_facets() const { return defined_.empty() ? 0 : (int)defined_[0].size(); }

 private:
  std::vector<std::vector<bool>> defined_;
  MatQ chi_;
};

CharacterTable skeleton_character(const GameSpec& g, const CellComplex& cells);

enum class EdgeKind { kFlowing, kNeutral, kSingular };

struct EdgeClass {
  EdgeKind kind = EdgeKind::kNeutral;
  int source = -1, target = -1;  // vertex indices, flowing edges only
};

struct FlowGraph {
  std::vector<EdgeClass> edges;          // by edge index
  std::vector<bool> saddle;              // by vertex index
  std::vector<int> degenerate_facets;    // facets where H is identically zero
  bool regular = false;                  // no singular edges, no degenerate facet

  std::vector<int> flowing_edges() const;
  /// Outgoing flowing edges at a vertex.
  std::vector<int> out_edges(int v) const;  // filled by classify_edges
  std::vector<std::vector<int>> out;        // out[v] = flowing edge indices
};

FlowGraph classify_edges(const GameSpec& g, const CellComplex& cells,
                         const CharacterTable& ct);

/// Polyhedral cone in R^F: forced-zero coordinates plus strict homogeneous
/// inequalities (rows mean l.y > 0).
struct ConeSector {
  std::vector<bool> zero;  // coordinates pinned to 0
  MatQ ineqs;              // each row l: l.y > 0
  bool contains_strict(const VecQ& y) const;
  bool nonempty() const;   // exact LP feasibility
};

/// One S-branch: vertex itinerary, edge itinerary, domain cone and the
/// composed linear map in the ambient F-coordinates.
struct Branch {
  std::vector<int> vertex_path;  // v_0 .. v_{m+1} (vertex indices)
  std::vector<int> edge_path;    // gamma_0 .. gamma_m (edge indices)
  ConeSector domain;             // Pi_xi
  MatQ matrix;                   // M_xi, |F| x |F|
};

struct PiecewiseLinearMap {
  std::vector<Branch> branches;
  std::vector<int> section_edges;  // the structural set S
};

/// The local transition at vertex v from incoming edge `in` to outgoing edge
/// `out`: domain sector and ambient linear map (rows/cols outside F_v zero;
/// the column of the incoming-wall coordinate is zeroed, matching the
/// convention used for printed branch matrices).
struct VertexBranch {
  ConeSector domain;    // Pi_{gamma,gamma'}
  MatQ map;             // L_{gamma,gamma'}
  int r = -1, s = -1;   // wall coordinate of `in` at v / opposite facet of `out`
};

VertexBranch vertex_branch(const GameSpec& g, const CellComplex& cells,
                           const CharacterTable& ct, const FlowGraph& fg,
                           int edge_in, int edge_out);

/// Verify that S meets every heteroclinic cycle: the flowing digraph minus S
/// must be acyclic. Returns a topological order of the remaining edge graph
/// as certificate, or nullopt if S is not structural.
std::optional<std::vector<int>> structural_set_verify(const CellComplex& cells,
                                                      const FlowGraph& fg,
                                                      const std::vector<int>& s_edges);

/// Minimal structural set: exhaustive for |S| <= 3, greedy feedback edges
/// beyond that (always verified before returning).
std::vector<int> structural_set_find(const CellComplex& cells, const FlowGraph& fg);

PiecewiseLinearMap enumerate_branches(const GameSpec& g, const CellComplex& cells,
                                      const CharacterTable& ct, const FlowGraph& fg,
                                      const std::vector<int>& s_edges);

/// Product of branch matrices along a composable branch itinerary
/// (first branch applied first).
MatQ branch_matrix(const PiecewiseLinearMap& pl, const std::vector<int>& itinerary);

/// Linear invariants eta_q (coefficients lambda_a q_i) and eta_w.
struct EtaFunctionals {
  RowQ eta_q;
  std::vector<RowQ> eta_w;  // one per casimir
  VecQ eval(const VecQ& y) const;
};

EtaFunctionals make_eta(const GameSpec& g, const HamiltonianSpec& hs,
                        const std::vector<VecQ>& casimirs);

enum class OrbitStatus { kOk, kBoundaryHit, kOutsideSection };

struct OrbitRecord {
  OrbitStatus status = OrbitStatus::kOk;
  std::vector<VecQ> points;       // y_0 .. y_N (section points)
  std::vector<int> branch_ids;    // branch applied at each step
  std::vector<VecQ> eta_values;   // eta at each point
};

/// Exact iteration of the skeleton flow map; stops early with
/// kBoundaryHit when the point is not strictly inside any branch cone.
OrbitRecord iterate_skeleton(const PiecewiseLinearMap& pl, const EtaFunctionals& eta,
                             const VecQ& y0, int steps);

/// Polygon Delta_{xi,c}: closure of the branch cone cut by eta = c.
/// `cone` may be a branch domain or a section sector.
struct LevelPolygon {
  int dimension = -1;            // affine dimension of the eta-level slice
  std::vector<VecQ> vertices;    // cyclically ordered, exact; empty if infeasible
};

LevelPolygon level_polygon(const ConeSector& cone, const EtaFunctionals& eta,
                           const VecQ& c);

/// The section sector Pi_gamma (closure) for an edge of the structural set.
ConeSector section_sector(const CellComplex& cells, int edge);

/// Periodic orbit found by the itinerary fixed-point search.
struct PeriodicOrbit {
  std::vector<int> word;  // branch itinerary
  VecQ point;             // exact periodic point on the section
  int least_period = 0;
};

/// Search for a periodic point of exact least period `period` inside the
/// level set Delta_{S,c}, by solving the fixed-point system per itinerary
/// word (words pruned by exact cone feasibility).
std::optional<PeriodicOrbit> find_periodic_point(const PiecewiseLinearMap& pl,
                                                 const EtaFunctionals& eta,
                                                 const VecQ& c, int period);

}  // namespace polyrep
