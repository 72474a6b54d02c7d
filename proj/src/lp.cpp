#include "polyrep/lp.hpp"

#include <cassert>

namespace polyrep {
namespace {

// Full-tableau primal simplex, min form, Bland's rule. Columns are
// x+ | x- | slacks | artificials; rows already have nonnegative rhs.
struct Tableau {
  MatQ t;                  // m x (cols+1), rhs last
  std::vector<int> basis;  // basis[i] = column basic in row i

  int rows() const { return (int)t.rows(); }
  int cols() const { return (int)t.cols() - 1; }

  void pivot(int r, int c) {
    t.row(r) /= t(r, c);
    for (int i = 0; i < rows(); ++i)
      if (i != r && t(i, c) != 0) t.row(i) -= t(i, c) * t.row(r);
    basis[r] = c;
  }

  // Minimize cost over the current feasible dictionary. Returns false when
  // unbounded. `active` marks columns allowed to enter.
  bool run(RowQ& cost, Rat& value, const std::vector<bool>& active) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols(); ++j) {
        if (!active[j]) continue;
        if (cost[j] < 0) {
          enter = j;
          break;  // Bland: smallest index
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (int i = 0; i < rows(); ++i) {
        if (t(i, enter) <= 0) continue;
        Rat ratio = t(i, cols()) / t(i, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave < 0) return false;  // unbounded
      Rat factor = cost[enter];
      pivot(leave, enter);
      cost -= factor * t.row(leave);
      value = -cost[cols()];
    }
  }
};

}  // namespace

LpSolution lp_solve(const VecQ& c, const MatQ& ge_lhs, const VecQ& ge_rhs,
                    const MatQ& eq_lhs, const VecQ& eq_rhs) {
  const int n = (int)c.size();
  const int m_ge = (int)ge_lhs.rows();
  const int m_eq = (int)eq_lhs.rows();
  const int m = m_ge + m_eq;
  const int n_struct = 2 * n + m_ge;        // x+, x-, slacks
  const int n_total = n_struct + m;         // + artificials

  Tableau tab;
  tab.t = MatQ::Zero(m, n_total + 1);
  tab.basis.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    RowQ row = RowQ::Zero(n);
    Rat rhs;
    if (i < m_ge) {
      row = ge_lhs.row(i);
      rhs = ge_rhs[i];
    } else {
      row = eq_lhs.row(i - m_ge);
      rhs = eq_rhs[i - m_ge];
    }
    tab.t.block(i, 0, 1, n) = row;
    tab.t.block(i, n, 1, n) = -row;
    if (i < m_ge) tab.t(i, 2 * n + i) = -1;  // a x - s = b
    tab.t(i, n_total) = rhs;
    if (tab.t(i, n_total) < 0) tab.t.row(i) = -tab.t.row(i);
    tab.t(i, n_struct + i) = 1;  // artificial
    tab.basis[i] = n_struct + i;
  }

  // Phase 1: minimize the artificial sum.
  RowQ cost = RowQ::Zero(n_total + 1);
  for (int i = 0; i < m; ++i) cost[n_struct + i] = 1;
  for (int i = 0; i < m; ++i) cost -= tab.t.row(i);  // price out the basis
  Rat value = -cost[n_total];
  std::vector<bool> active(n_total, true);
  bool bounded = tab.run(cost, value, active);
  assert(bounded);
  (void)bounded;
  if (value != 0) return {LpStatus::kInfeasible, Rat(0), VecQ()};

  // Drive leftover artificials out of the basis (or drop redundant rows).
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < n_struct) continue;
    int c2 = -1;
    for (int j = 0; j < n_struct; ++j)
      if (tab.t(i, j) != 0) {
        c2 = j;
        break;
      }
    if (c2 >= 0) tab.pivot(i, c2);
  }
  for (int j = n_struct; j < n_total; ++j) active[j] = false;

  // Phase 2: minimize -c.x (we maximize c.x).
  RowQ cost2 = RowQ::Zero(n_total + 1);
  for (int j = 0; j < n; ++j) {
    cost2[j] = -c[j];
    cost2[n + j] = c[j];
  }
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] >= n_struct) continue;  // leftover artificial on redundant row
    if (cost2[tab.basis[i]] != 0) cost2 -= cost2[tab.basis[i]] * tab.t.row(i);
  }
  Rat value2 = -cost2[n_total];
  if (!tab.run(cost2, value2, active))
    return {LpStatus::kUnbounded, Rat(0), VecQ()};

  VecQ x = VecQ::Zero(n);
  for (int i = 0; i < m; ++i) {
    int b = tab.basis[i];
    if (b < n)
      x[b] += tab.t(i, n_total);
    else if (b < 2 * n)
      x[b - n] -= tab.t(i, n_total);
  }
  // value2 is the minimum of -c.x.
  return {LpStatus::kOptimal, -value2, std::move(x)};
}

bool lp_feasible(const MatQ& ge_lhs, const VecQ& ge_rhs) {
  VecQ c = VecQ::Zero(ge_lhs.cols());
  MatQ eq(0, ge_lhs.cols());
  VecQ eq_rhs(0);
  auto sol = lp_solve(c, ge_lhs, ge_rhs, eq, eq_rhs);
  return sol.status == LpStatus::kOptimal;
}

bool cone_strictly_feasible(const MatQ& lhs) {
  if (lhs.rows() == 0) return true;
  VecQ ones = VecQ::Constant(lhs.rows(), 1);
  return lp_feasible(lhs, ones);
}

}  // namespace polyrep
