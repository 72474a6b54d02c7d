#pragma once

#include <optional>
#include <vector>

#include "polyrep/game.hpp"

namespace polyrep {

/// Vertex of the state polytope: one strategy per group.
struct Vertex {
  std::vector<int> label;  // label[a] = strategy of group a (0-based global id)
  VecQ point;              // the 0/1 state vector
};

/// Edge between two vertices whose labels differ in exactly one group.
struct Edge {
  int va = -1, vb = -1;    // vertex indices
  int group = -1;          // the group whose strategy changes
  std::vector<int> label;  // the p+1 strategies involved, ascending
  int opposite_a = -1;     // facet opposite the edge at va (= strategy of vb in `group`)
  int opposite_b = -1;     // facet opposite the edge at vb
};

/// Combinatorics of the product-of-simplices polytope: vertices in
/// lexicographic label order, facets = strategies, edges ordered to match
/// the usual tables (edges of the last group first, then earlier groups;
/// within a group by strategy pair, then by the fixed coordinates).
class CellComplex {
 public:
  explicit CellComplex(const GameSpec& g);

  int num_vertices() const { return (int)vertices_.size(); }
  int num_facets() const { return n_; }
  int num_edges() const { return (int)edges_.size(); }

  const Vertex& vertex(int i) const { return vertices_[i]; }
  const Edge& edge(int k) const { return edges_[k]; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Does vertex v lie on facet s (i.e. strategy s unused by v)?
  bool vertex_on_facet(int v, int s) const;
  /// Facets through vertex v, ascending (the chart coordinates at v).
  const std::vector<int>& facets_of_vertex(int v) const { return vertex_facets_[v]; }
  /// Position of facet s inside facets_of_vertex(v), or -1.
  int chart_position(int v, int s) const;

  int vertex_index(const std::vector<int>& label) const;
  /// Edge joining two vertices, if adjacent.
  std::optional<int> edge_between(int va, int vb) const;

 private:
  int n_ = 0, p_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> vertex_facets_;
};

CellComplex enumerate_cells(const GameSpec& g);

}  // namespace polyrep
