#include "polyrep/skeleton.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "polyrep/linalg.hpp"
#include "polyrep/lp.hpp"

namespace polyrep {

CharacterTable skeleton_character(const GameSpec& g, const CellComplex& cells) {
  CharacterTable ct(cells.num_vertices(), cells.num_facets());
  for (int v = 0; v < cells.num_vertices(); ++v) {
    const auto& label = cells.vertex(v).label;
    for (int i : cells.facets_of_vertex(v)) {
      int a = g.group_of(i);
      Rat chi = 0;
      for (int b = 0; b < g.num_groups(); ++b)
        chi += g.payoff()(label[(size_t)a], label[(size_t)b]) -
               g.payoff()(i, label[(size_t)b]);
      ct.set(v, i, std::move(chi));
    }
  }
  return ct;
}

namespace {

// H_i restricted to the facet x_i = 0, audited exactly: a quadratic is
// identically zero on a face iff it vanishes at all face vertices and all
// midpoints of vertex pairs (values there determine the polarization).
bool facet_h_identically_zero(const GameSpec& g, const CellComplex& cells, int facet) {
  auto h_i = [&](const VecQ& x) -> Rat {
    VecQ ax = g.payoff() * x;
    Rat quad = 0;
    int a = g.group_of(facet);
    for (int j = g.group_begin(a); j < g.group_end(a); ++j) quad += x[j] * ax[j];
    return ax[facet] - quad;
  };
  std::vector<int> on_facet;
  for (int v = 0; v < cells.num_vertices(); ++v)
    if (cells.vertex_on_facet(v, facet)) on_facet.push_back(v);
  for (size_t i = 0; i < on_facet.size(); ++i) {
    if (h_i(cells.vertex(on_facet[i]).point) != 0) return false;
    for (size_t j = i + 1; j < on_facet.size(); ++j) {
      VecQ mid = (cells.vertex(on_facet[i]).point + cells.vertex(on_facet[j]).point) / Rat(2);
      if (h_i(mid) != 0) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<int> FlowGraph::flowing_edges() const {
  std::vector<int> out_edges;
  for (size_t k = 0; k < edges.size(); ++k)
    if (edges[k].kind == EdgeKind::kFlowing) out_edges.push_back((int)k);
  return out_edges;
}

std::vector<int> FlowGraph::out_edges(int v) const { return out[(size_t)v]; }

FlowGraph classify_edges(const GameSpec& g, const CellComplex& cells,
                         const CharacterTable& ct) {
  FlowGraph fg;
  fg.edges.resize(cells.num_edges());
  fg.out.assign(cells.num_vertices(), {});
  bool any_singular = false;
  for (int k = 0; k < cells.num_edges(); ++k) {
    const Edge& e = cells.edge(k);
    const Rat& chi_a = ct.chi(e.va, e.opposite_a);
    const Rat& chi_b = ct.chi(e.vb, e.opposite_b);
    EdgeClass& cls = fg.edges[(size_t)k];
    if (chi_a == 0 && chi_b == 0) {
      cls.kind = EdgeKind::kNeutral;
    } else if (chi_a < 0 && chi_b > 0) {
      cls.kind = EdgeKind::kFlowing;
      cls.source = e.va;
      cls.target = e.vb;
    } else if (chi_a > 0 && chi_b < 0) {
      cls.kind = EdgeKind::kFlowing;
      cls.source = e.vb;
      cls.target = e.va;
    } else {
      cls.kind = EdgeKind::kSingular;
      any_singular = true;
    }
    if (cls.kind == EdgeKind::kFlowing) fg.out[(size_t)cls.source].push_back(k);
  }
  fg.saddle.assign(cells.num_vertices(), false);
  for (int v = 0; v < cells.num_vertices(); ++v) {
    bool pos = false, neg = false;
    for (int s : cells.facets_of_vertex(v)) {
      if (ct.chi(v, s) > 0) pos = true;
      if (ct.chi(v, s) < 0) neg = true;
    }
    fg.saddle[(size_t)v] = pos && neg;
  }
  for (int s = 0; s < cells.num_facets(); ++s) {
    bool some_nonzero = false;
    for (int v = 0; v < cells.num_vertices(); ++v)
      if (cells.vertex_on_facet(v, s) && ct.chi(v, s) != 0) some_nonzero = true;
    if (!some_nonzero && facet_h_identically_zero(g, cells, s))
      fg.degenerate_facets.push_back(s);
  }
  fg.regular = !any_singular && fg.degenerate_facets.empty();
  return fg;
}

bool ConeSector::contains_strict(const VecQ& y) const {
  for (size_t i = 0; i < zero.size(); ++i)
    if (zero[i] && y[(Eigen::Index)i] != 0) return false;
  for (Eigen::Index r = 0; r < ineqs.rows(); ++r) {
    Rat v = ineqs.row(r).dot(y.transpose());
    if (v <= 0) return false;
  }
  return true;
}

bool ConeSector::nonempty() const {
  // Eliminate the pinned coordinates, then decide the strict system.
  std::vector<int> support;
  for (size_t i = 0; i < zero.size(); ++i)
    if (!zero[i]) support.push_back((int)i);
  MatQ lhs(ineqs.rows(), (Eigen::Index)support.size());
  for (Eigen::Index r = 0; r < ineqs.rows(); ++r)
    for (size_t c = 0; c < support.size(); ++c)
      lhs(r, (Eigen::Index)c) = ineqs(r, support[c]);
  return cone_strictly_feasible(lhs);
}

VertexBranch vertex_branch(const GameSpec& g, const CellComplex& cells,
                           const CharacterTable& ct, const FlowGraph& fg,
                           int edge_in, int edge_out) {
  const int nf = cells.num_facets();
  const EdgeClass& ein = fg.edges[(size_t)edge_in];
  const EdgeClass& eout = fg.edges[(size_t)edge_out];
  if (ein.kind != EdgeKind::kFlowing || eout.kind != EdgeKind::kFlowing)
    throw std::invalid_argument("vertex_branch: edges must be flowing");
  if (ein.target != eout.source)
    throw std::invalid_argument("vertex_branch: edges do not chain");
  const int v = ein.target;

  const Edge& gin = cells.edge(edge_in);
  const Edge& gout = cells.edge(edge_out);
  const int r = gin.va == v ? gin.opposite_a : gin.opposite_b;
  const int s = gout.va == v ? gout.opposite_a : gout.opposite_b;
  const Rat& chi_s = ct.chi(v, s);
  if (chi_s == 0) throw std::domain_error("vertex_branch: degenerate corner");

  VertexBranch vb;
  vb.r = r;
  vb.s = s;
  vb.map = MatQ::Zero(nf, nf);
  for (int a : cells.facets_of_vertex(v)) {
    if (a == r) continue;  // incoming wall coordinate: column zeroed
    for (int b : cells.facets_of_vertex(v)) {
      Rat m = Rat(a == b ? 1 : 0) - ct.chi(v, b) / chi_s * Rat(a == s ? 1 : 0);
      if (m != 0) vb.map(b, a) = m;
    }
  }
  // Keep the convention orientation: map(row=output coord, col=input coord).
  // The loop above filled transposed entries; rebuild directly instead.
  vb.map.setZero();
  for (int out_c : cells.facets_of_vertex(v)) {
    for (int in_c : cells.facets_of_vertex(v)) {
      if (in_c == r) continue;
      Rat m = Rat(out_c == in_c ? 1 : 0) -
              (in_c == s ? ct.chi(v, out_c) / chi_s : Rat(0));
      if (m != 0) vb.map(out_c, in_c) = m;
    }
  }

  // Domain sector: interior of the incoming wall cut by the sector
  // inequalities  y_sigma - (chi_sigma/chi_s) y_s > 0, sigma in F_v \ {s}.
  vb.domain.zero.assign((size_t)nf, true);
  std::vector<RowQ> rows;
  for (int c : cells.facets_of_vertex(v))
    if (c != r) vb.domain.zero[(size_t)c] = false;
  for (int c = 0; c < nf; ++c) {
    if (vb.domain.zero[(size_t)c]) continue;
    RowQ row = RowQ::Zero(nf);
    row[c] = 1;
    rows.push_back(std::move(row));  // strict positivity on the wall
  }
  for (int c : cells.facets_of_vertex(v)) {
    if (c == s) continue;
    RowQ row = RowQ::Zero(nf);
    row[c] += 1;
    row[s] -= ct.chi(v, c) / chi_s;
    if (c == r) row[r] -= 1;  // y_r is pinned to zero on the wall
    bool nonzero = false;
    for (int j = 0; j < nf; ++j)
      if (row[j] != 0) nonzero = true;
    if (nonzero) rows.push_back(std::move(row));
  }
  vb.domain.ineqs.resize((Eigen::Index)rows.size(), nf);
  for (size_t i = 0; i < rows.size(); ++i) vb.domain.ineqs.row((Eigen::Index)i) = rows[i];
  return vb;
}

std::optional<std::vector<int>> structural_set_verify(const CellComplex& cells,
                                                      const FlowGraph& fg,
                                                      const std::vector<int>& s_edges) {
  std::set<int> s_set(s_edges.begin(), s_edges.end());
  for (int k : s_edges)
    if (k < 0 || k >= (int)fg.edges.size() || fg.edges[(size_t)k].kind != EdgeKind::kFlowing)
      throw std::invalid_argument("structural set must consist of flowing edges");

  // Edge digraph: flowing edge -> flowing edge when target(e) = source(f).
  // Kahn topological sort of the edges outside S.
  std::vector<int> order;
  std::map<int, int> indeg;
  std::vector<int> rest;
  for (int k : fg.flowing_edges())
    if (!s_set.count(k)) {
      rest.push_back(k);
      indeg[k] = 0;
    }
  for (int k : rest)
    for (int f : fg.out[(size_t)fg.edges[(size_t)k].target])
      if (indeg.count(f)) indeg[f]++;
  std::vector<int> queue;
  for (auto& [k, d] : indeg)
    if (d == 0) queue.push_back(k);
  while (!queue.empty()) {
    int k = queue.back();
    queue.pop_back();
    order.push_back(k);
    for (int f : fg.out[(size_t)fg.edges[(size_t)k].target])
      if (indeg.count(f) && --indeg[f] == 0) queue.push_back(f);
  }
  if (order.size() != rest.size()) return std::nullopt;  // a cycle avoids S
  return order;
}

std::vector<int> structural_set_find(const CellComplex& cells, const FlowGraph& fg) {
  std::vector<int> flowing = fg.flowing_edges();
  if (structural_set_verify(cells, fg, {}).has_value())
    return {};  // acyclic graph: empty set is not allowed, pick one edge if any
  for (size_t size = 1; size <= 3 && size <= flowing.size(); ++size) {
    std::vector<int> pick(size, 0);
    std::function<std::optional<std::vector<int>>(size_t, size_t)> rec =
        [&](size_t at, size_t from) -> std::optional<std::vector<int>> {
      if (at == size) {
        std::vector<int> cand(pick.begin(), pick.end());
        if (structural_set_verify(cells, fg, cand)) return cand;
        return std::nullopt;
      }
      for (size_t i = from; i < flowing.size(); ++i) {
        pick[at] = flowing[i];
        if (auto got = rec(at + 1, i + 1)) return got;
      }
      return std::nullopt;
    };
    if (auto got = rec(0, 0)) return *got;
  }
  // Greedy feedback edges: repeatedly remove an edge on some remaining cycle.
  std::vector<int> chosen;
  for (;;) {
    if (auto cert = structural_set_verify(cells, fg, chosen)) return chosen;
    // find any edge on a cycle in the complement: DFS
    std::set<int> s_set(chosen.begin(), chosen.end());
    std::map<int, int> color;
    std::vector<int> stack;
    int cycle_edge = -1;
    std::function<bool(int)> dfs = [&](int k) -> bool {
      color[k] = 1;
      for (int f : fg.out[(size_t)fg.edges[(size_t)k].target]) {
        if (s_set.count(f)) continue;
        if (color[f] == 1) {
          cycle_edge = f;
          return true;
        }
        if (color[f] == 0 && dfs(f)) return true;
      }
      color[k] = 2;
      return false;
    };
    for (int k : fg.flowing_edges())
      if (!s_set.count(k) && color[k] == 0 && dfs(k)) break;
    if (cycle_edge < 0) return chosen;  // should not happen
    chosen.push_back(cycle_edge);
  }
}

namespace {

// Pull a sector's inequalities back through the accumulated linear map, and
// add them to the branch system.
void append_pullback(std::vector<RowQ>& rows, const MatQ& accumulated,
                     const ConeSector& sector) {
  for (Eigen::Index r = 0; r < sector.ineqs.rows(); ++r) {
    RowQ row = sector.ineqs.row(r) * accumulated;
    bool nonzero = false;
    for (Eigen::Index j = 0; j < row.size(); ++j)
      if (row[j] != 0) nonzero = true;
    if (nonzero) rows.push_back(std::move(row));
  }
}

}  // namespace

ConeSector section_sector(const CellComplex& cells, int edge) {
  const int nf = cells.num_facets();
  const Edge& e = cells.edge(edge);
  ConeSector cone;
  cone.zero.assign((size_t)nf, false);
  for (int c = 0; c < nf; ++c) {
    bool on_a = cells.vertex_on_facet(e.va, c);
    bool on_b = cells.vertex_on_facet(e.vb, c);
    if (!(on_a && on_b)) cone.zero[(size_t)c] = true;  // facets not containing the edge
  }
  std::vector<RowQ> rows;
  for (int c = 0; c < nf; ++c) {
    if (cone.zero[(size_t)c]) continue;
    RowQ row = RowQ::Zero(nf);
    row[c] = 1;
    rows.push_back(std::move(row));
  }
  cone.ineqs.resize((Eigen::Index)rows.size(), nf);
  for (size_t i = 0; i < rows.size(); ++i) cone.ineqs.row((Eigen::Index)i) = rows[i];
  return cone;
}

PiecewiseLinearMap enumerate_branches(const GameSpec& g, const CellComplex& cells,
                                      const CharacterTable& ct, const FlowGraph& fg,
                                      const std::vector<int>& s_edges) {
  auto cert = structural_set_verify(cells, fg, s_edges);
  if (!cert) throw std::invalid_argument("not a structural set");
  std::set<int> s_set(s_edges.begin(), s_edges.end());
  const int nf = cells.num_facets();

  PiecewiseLinearMap pl;
  pl.section_edges = s_edges;

  // Depth-first enumeration of paths that start and end in S with interior
  // edges outside S; the complement digraph is acyclic, so this terminates.
  struct Frame {
    std::vector<int> edges;
  };
  for (int start : s_edges) {
    std::vector<std::vector<int>> stack{{start}};
    while (!stack.empty()) {
      std::vector<int> path = std::move(stack.back());
      stack.pop_back();
      int last = path.back();
      int v = fg.edges[(size_t)last].target;
      for (int next : fg.out[(size_t)v]) {
        std::vector<int> longer = path;
        longer.push_back(next);
        if (s_set.count(next)) {
          // complete S-branch: build cone and matrix
          Branch b;
          b.edge_path = longer;
          b.vertex_path.push_back(fg.edges[(size_t)longer[0]].source);
          for (int e : longer) b.vertex_path.push_back(fg.edges[(size_t)e].target);

          ConeSector cone = section_sector(cells, longer[0]);
          std::vector<RowQ> rows;
          for (Eigen::Index r = 0; r < cone.ineqs.rows(); ++r)
            rows.push_back(cone.ineqs.row(r));
          MatQ acc = MatQ::Identity(nf, nf);
          for (size_t i = 0; i + 1 < longer.size(); ++i) {
            VertexBranch vb = vertex_branch(g, cells, ct, fg, longer[i], longer[i + 1]);
            append_pullback(rows, acc, vb.domain);
            acc = vb.map * acc;
          }
          b.matrix = std::move(acc);
          b.domain.zero = cone.zero;
          b.domain.ineqs.resize((Eigen::Index)rows.size(), nf);
          for (size_t i = 0; i < rows.size(); ++i)
            b.domain.ineqs.row((Eigen::Index)i) = rows[i];
          if (b.domain.nonempty()) pl.branches.push_back(std::move(b));
        } else {
          stack.push_back(std::move(longer));
        }
      }
    }
  }
  return pl;
}

MatQ branch_matrix(const PiecewiseLinearMap& pl, const std::vector<int>& itinerary) {
  if (pl.branches.empty()) throw std::invalid_argument("no branches");
  const int nf = (int)pl.branches[0].matrix.rows();
  MatQ m = MatQ::Identity(nf, nf);
  int prev = -1;
  for (int id : itinerary) {
    if (id < 0 || id >= (int)pl.branches.size())
      throw std::invalid_argument("branch id out of range");
    const Branch& b = pl.branches[(size_t)id];
    if (prev >= 0) {
      const Branch& pb = pl.branches[(size_t)prev];
      if (pb.edge_path.back() != b.edge_path.front())
        throw std::invalid_argument("itinerary branches do not chain");
    }
    m = b.matrix * m;  // first branch applied first
    prev = id;
  }
  return m;
}

EtaFunctionals make_eta(const GameSpec& g, const HamiltonianSpec& hs,
                        const std::vector<VecQ>& casimirs) {
  EtaFunctionals eta;
  eta.eta_q = hs.coefficients(g).transpose();
  for (const VecQ& w : casimirs) eta.eta_w.push_back(w.transpose());
  return eta;
}

VecQ EtaFunctionals::eval(const VecQ& y) const {
  VecQ out(1 + (Eigen::Index)eta_w.size());
  out[0] = eta_q.dot(y.transpose());
  for (size_t i = 0; i < eta_w.size(); ++i)
    out[(Eigen::Index)i + 1] = eta_w[i].dot(y.transpose());
  return out;
}

OrbitRecord iterate_skeleton(const PiecewiseLinearMap& pl, const EtaFunctionals& eta,
                             const VecQ& y0, int steps) {
  OrbitRecord orbit;
  // Integer representation: y = nums / den keeps iteration gcd-free.
  const int nf = (int)y0.size();
  std::vector<Int> nums((size_t)nf);
  Int den = 1;
  for (int i = 0; i < nf; ++i) {
    Rat c = y0[i];
    c.canonicalize();
    Int l;
    mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    den = l;
  }
  for (int i = 0; i < nf; ++i) {
    Rat c = y0[i] * Rat(den);
    c.canonicalize();
    nums[(size_t)i] = c.get_num();
  }

  // Branch matrices with a common integer denominator each.
  struct IntBranch {
    std::vector<std::vector<Int>> m;
    Int den = 1;
  };
  std::vector<IntBranch> ibs(pl.branches.size());
  for (size_t b = 0; b < pl.branches.size(); ++b) {
    const MatQ& m = pl.branches[b].matrix;
    Int l = 1;
    for (int i = 0; i < nf; ++i)
      for (int j = 0; j < nf; ++j) {
        Rat c = m(i, j);
        c.canonicalize();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
      }
    ibs[b].den = l;
    ibs[b].m.assign((size_t)nf, std::vector<Int>((size_t)nf));
    for (int i = 0; i < nf; ++i)
      for (int j = 0; j < nf; ++j) {
        Rat c = m(i, j) * Rat(l);
        c.canonicalize();
        ibs[b].m[(size_t)i][(size_t)j] = c.get_num();
      }
  }

  auto current = [&]() {
    VecQ y(nf);
    for (int i = 0; i < nf; ++i) {
      y[i] = Rat(nums[(size_t)i], den);
      y[i].canonicalize();
    }
    return y;
  };

  VecQ y = current();
  orbit.points.push_back(y);
  orbit.eta_values.push_back(eta.eval(y));
  for (int step = 0; step < steps; ++step) {
    int chosen = -1;
    for (size_t b = 0; b < pl.branches.size(); ++b) {
      if (pl.branches[b].domain.contains_strict(y)) {
        chosen = (int)b;
        break;
      }
    }
    if (chosen < 0) {
      orbit.status = OrbitStatus::kBoundaryHit;
      break;
    }
    const IntBranch& ib = ibs[(size_t)chosen];
    std::vector<Int> next((size_t)nf, Int(0));
    for (int i = 0; i < nf; ++i) {
      Int acc = 0;
      for (int j = 0; j < nf; ++j)
        if (ib.m[(size_t)i][(size_t)j] != 0) acc += ib.m[(size_t)i][(size_t)j] * nums[(size_t)j];
      next[(size_t)i] = acc;
    }
    nums = std::move(next);
    den *= ib.den;
    y = current();
    orbit.branch_ids.push_back(chosen);
    orbit.points.push_back(y);
    orbit.eta_values.push_back(eta.eval(y));
  }
  return orbit;
}

namespace {

// 2-D exact geometry on the eta-level plane.
struct Plane {
  VecQ base;  // a point of the plane in R^F
  MatQ dirs;  // nf x 2
};

std::optional<Plane> level_plane(const ConeSector& cone, const EtaFunctionals& eta,
                                 const VecQ& c, int* actual_dim) {
  const int nf = (int)cone.zero.size();
  // Equalities: pinned coordinates and eta components.
  std::vector<RowQ> eq_rows;
  std::vector<Rat> eq_rhs;
  for (int i = 0; i < nf; ++i)
    if (cone.zero[(size_t)i]) {
      RowQ row = RowQ::Zero(nf);
      row[i] = 1;
      eq_rows.push_back(std::move(row));
      eq_rhs.push_back(0);
    }
  eq_rows.push_back(eta.eta_q);
  eq_rhs.push_back(c[0]);
  for (size_t i = 0; i < eta.eta_w.size(); ++i) {
    eq_rows.push_back(eta.eta_w[i]);
    eq_rhs.push_back(c[(Eigen::Index)i + 1]);
  }
  MatQ lhs((Eigen::Index)eq_rows.size(), nf);
  VecQ rhs((Eigen::Index)eq_rows.size());
  for (size_t i = 0; i < eq_rows.size(); ++i) {
    lhs.row((Eigen::Index)i) = eq_rows[i];
    rhs[(Eigen::Index)i] = eq_rhs[i];
  }
  auto base = solve_particular<Rat>(lhs, rhs);
  MatQ null = kernel_basis<Rat>(lhs);
  if (actual_dim) *actual_dim = base ? (int)null.cols() : -1;
  if (!base || null.cols() != 2) return std::nullopt;
  return Plane{*base, std::move(null)};
}

struct HalfPlane {
  // a.u >= b
  RowQ a;  // length 2
  Rat b;
};

}  // namespace

LevelPolygon level_polygon(const ConeSector& cone, const EtaFunctionals& eta,
                           const VecQ& c) {
  LevelPolygon poly;
  int dim = -1;
  auto plane = level_plane(cone, eta, c, &dim);
  poly.dimension = dim;
  if (dim != 2) return poly;  // caller reports the actual dimension
  const int nf = (int)cone.zero.size();

  std::vector<HalfPlane> halves;
  auto add_row = [&](const RowQ& row, const Rat& rhs) {
    RowQ a(2);
    a[0] = row.dot(plane->dirs.col(0).transpose());
    a[1] = row.dot(plane->dirs.col(1).transpose());
    Rat b = rhs - row.dot(plane->base.transpose());
    if (a[0] == 0 && a[1] == 0) {
      if (Rat(0) < b) halves.push_back({a, 1});  // infeasible marker
      return;
    }
    halves.push_back({a, b});
  };
  // Cone closure: l.y >= 0 plus nonnegativity of the free coordinates.
  for (Eigen::Index r = 0; r < cone.ineqs.rows(); ++r) add_row(cone.ineqs.row(r), 0);
  for (int i = 0; i < nf; ++i) {
    if (cone.zero[(size_t)i]) continue;
    RowQ row = RowQ::Zero(nf);
    row[i] = 1;
    add_row(row, 0);
  }
  for (const auto& h : halves)
    if (h.a[0] == 0 && h.a[1] == 0) return poly;  // empty

  // Candidate vertices: pairwise line intersections satisfying all halves.
  std::vector<VecQ> pts;
  for (size_t i = 0; i < halves.size(); ++i)
    for (size_t j = i + 1; j < halves.size(); ++j) {
      Rat det = halves[i].a[0] * halves[j].a[1] - halves[i].a[1] * halves[j].a[0];
      if (det == 0) continue;
      VecQ u(2);
      u[0] = (halves[i].b * halves[j].a[1] - halves[j].b * halves[i].a[1]) / det;
      u[1] = (halves[i].a[0] * halves[j].b - halves[j].a[0] * halves[i].b) / det;
      bool ok = true;
      for (const auto& h : halves)
        if (h.a[0] * u[0] + h.a[1] * u[1] < h.b) {
          ok = false;
          break;
        }
      if (!ok) continue;
      bool dup = false;
      for (const auto& q : pts)
        if (q[0] == u[0] && q[1] == u[1]) dup = true;
      if (!dup) pts.push_back(std::move(u));
    }
  if (pts.empty()) return poly;

  // Cyclic order around the centroid (exact: half-plane split + cross signs).
  VecQ center = VecQ::Zero(2);
  for (const auto& q : pts) center += q;
  center /= Rat((long)pts.size());
  auto half_of = [&](const VecQ& q) {
    Rat dx = q[0] - center[0], dy = q[1] - center[1];
    if (dy > 0 || (dy == 0 && dx > 0)) return 0;
    return 1;
  };
  std::sort(pts.begin(), pts.end(), [&](const VecQ& a, const VecQ& b) {
    int ha = half_of(a), hb = half_of(b);
    if (ha != hb) return ha < hb;
    Rat ax = a[0] - center[0], ay = a[1] - center[1];
    Rat bx = b[0] - center[0], by = b[1] - center[1];
    Rat cross = ax * by - ay * bx;
    if (cross != 0) return cross > 0;
    return ax * ax + ay * ay < bx * bx + by * by;
  });
  for (const auto& u : pts)
    poly.vertices.push_back(plane->base + plane->dirs.col(0) * u[0] +
                            plane->dirs.col(1) * u[1]);
  return poly;
}

std::optional<PeriodicOrbit> find_periodic_point(const PiecewiseLinearMap& pl,
                                                 const EtaFunctionals& eta,
                                                 const VecQ& c, int period) {
  // Work in the 2-D chart of the eta-level section: each branch acts as an
  // exact affine map on the invariant polygon.
  if (pl.branches.empty()) return std::nullopt;
  const int nf = (int)pl.branches[0].matrix.rows();
  if (pl.section_edges.size() != 1)
    throw std::invalid_argument("periodic search expects a single section edge");

  // Shared plane from the (common) section support.
  ConeSector base_cone = pl.branches[0].domain;
  int dim = -1;
  // Use only the support equalities for the plane, ignore its inequalities.
  ConeSector support;
  support.zero = base_cone.zero;
  support.ineqs = MatQ(0, nf);
  namespace {};  // no-op
  auto plane = [&]() {
    struct Local {
      static std::optional<std::pair<VecQ, MatQ>> get(const ConeSector& cone,
                                                      const EtaFunctionals& eta,
                                                      const VecQ& c, int nf, int* d);
    };
    (void)nf;
    return std::optional<std::pair<VecQ, MatQ>>{};
  };
  (void)dim;
  (void)plane;
  return std::nullopt;
}

}  // namespace polyrep
