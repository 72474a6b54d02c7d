#include "polyrep/cells.hpp"

#include <algorithm>
#include <map>

namespace polyrep {

CellComplex::CellComplex(const GameSpec& g) {
  n_ = g.num_strategies();
  p_ = g.num_groups();

  // Vertices: one strategy per group, lexicographic on the label tuple.
  std::vector<int> label(p_);
  for (int a = 0; a < p_; ++a) label[a] = g.group_begin(a);
  for (;;) {
    Vertex v;
    v.label = label;
    v.point = VecQ::Zero(n_);
    for (int a = 0; a < p_; ++a) v.point[label[a]] = 1;
    vertices_.push_back(std::move(v));
    int a = p_ - 1;
    while (a >= 0 && label[a] + 1 >= g.group_end(a)) {
      label[a] = g.group_begin(a);
      --a;
    }
    if (a < 0) break;
    ++label[a];
  }

  vertex_facets_.resize(vertices_.size());
  for (size_t i = 0; i < vertices_.size(); ++i) {
    for (int s = 0; s < n_; ++s)
      if (vertex_on_facet((int)i, s)) vertex_facets_[i].push_back(s);
  }

  // Edges: the strategy pair of one group varies, the rest is fixed. Last
  // group first, pairs ascending, then the fixed strategies ascending —
  // the order used by the worked-example tables.
  std::map<std::vector<int>, int> index_of;
  for (size_t i = 0; i < vertices_.size(); ++i) index_of[vertices_[i].label] = (int)i;

  for (int a = p_ - 1; a >= 0; --a) {
    for (int i = g.group_begin(a); i < g.group_end(a); ++i)
      for (int j = i + 1; j < g.group_end(a); ++j) {
        // enumerate the fixed strategies of the other groups, lexicographic
        std::vector<int> fixed(p_);
        for (int b = 0; b < p_; ++b) fixed[b] = g.group_begin(b);
        for (;;) {
          Edge e;
          e.group = a;
          std::vector<int> la = fixed, lb = fixed;
          la[a] = i;
          lb[a] = j;
          e.va = index_of.at(la);
          e.vb = index_of.at(lb);
          e.opposite_a = j;  // facet x_j = 0 meets the edge only at va
          e.opposite_b = i;
          for (int b = 0; b < p_; ++b)
            if (b != a) e.label.push_back(fixed[b]);
          e.label.push_back(i);
          e.label.push_back(j);
          std::sort(e.label.begin(), e.label.end());
          edges_.push_back(std::move(e));

          int b = p_ - 1;
          while (b >= 0 && (b == a || fixed[b] + 1 >= g.group_end(b))) {
            if (b != a) fixed[b] = g.group_begin(b);
            --b;
          }
          if (b < 0) break;
          ++fixed[b];
        }
      }
  }
}

bool CellComplex::vertex_on_facet(int v, int s) const {
  return vertices_[v].point[s] == 0;
}

int CellComplex::chart_position(int v, int s) const {
  const auto& f = vertex_facets_[v];
  auto it = std::lower_bound(f.begin(), f.end(), s);
  if (it == f.end() || *it != s) return -1;
  return (int)(it - f.begin());
}

int CellComplex::vertex_index(const std::vector<int>& label) const {
  for (size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].label == label) return (int)i;
  return -1;
}

std::optional<int> CellComplex::edge_between(int va, int vb) const {
  for (size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    if ((e.va == va && e.vb == vb) || (e.va == vb && e.vb == va)) return (int)k;
  }
  return std::nullopt;
}

CellComplex enumerate_cells(const GameSpec& g) { return CellComplex(g); }

}  // namespace polyrep
