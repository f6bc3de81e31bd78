#include "dcm/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dcm/linalg.hpp"

namespace dcm {

namespace {

constexpr double kReducedCostTol = 1e-9;
constexpr double kPivotTol = 1e-12;
constexpr std::size_t kIterationCap = 200000;
constexpr std::size_t kStallLimit = 1000;

// Dense tableau with an attached reduced-cost row. Column count may exceed
// lp.cols during phase 1 (artificials live at the end).
struct Tableau {
  std::size_t m = 0;
  std::size_t width = 0;  // columns excluding rhs
  std::vector<double> t;  // m rows * (width + 1), last entry of a row = rhs
  std::vector<double> z;  // width reduced costs
  double objective = 0.0;
  std::vector<std::size_t> basis;       // m
  std::vector<char> enterable;          // width
  std::vector<std::int64_t> key;        // width

  double& at(std::size_t r, std::size_t c) { return t[r * (width + 1) + c]; }
  double rhs(std::size_t r) const { return t[r * (width + 1) + width]; }
  double& rhs_ref(std::size_t r) { return t[r * (width + 1) + width]; }

  void pivot(std::size_t prow, std::size_t pcol) {
    const std::size_t stride = width + 1;
    double* prow_ptr = &t[prow * stride];
    const double pivot_value = prow_ptr[pcol];
    for (std::size_t c = 0; c <= width; ++c) prow_ptr[c] /= pivot_value;
    prow_ptr[pcol] = 1.0;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == prow) continue;
      double* row = &t[r * stride];
      const double factor = row[pcol];
      if (factor == 0.0) continue;
      for (std::size_t c = 0; c <= width; ++c) row[c] -= factor * prow_ptr[c];
      row[pcol] = 0.0;
    }
    const double zfactor = z[pcol];
    if (zfactor != 0.0) {
      for (std::size_t c = 0; c < width; ++c) z[c] -= zfactor * prow_ptr[c];
      objective += zfactor * prow_ptr[width];  // entering at value rhs/pivot
      z[pcol] = 0.0;
    }
    basis[prow] = pcol;
  }

  // Rebuilds reduced costs for a new cost vector over the current basis.
  void price(const std::vector<double>& cost) {
    z.assign(width, 0.0);
    for (std::size_t c = 0; c < width; ++c) z[c] = c < cost.size() ? cost[c] : 0.0;
    objective = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
      const double cb = basis[r] < cost.size() ? cost[basis[r]] : 0.0;
      if (cb == 0.0) continue;
      const double* row = &t[r * (width + 1)];
      for (std::size_t c = 0; c < width; ++c) z[c] -= cb * row[c];
      objective += cb * row[width];
    }
    for (std::size_t r = 0; r < m; ++r) z[basis[r]] = 0.0;
  }
};

enum class CoreStatus { optimal, unbounded, iteration_cap };

CoreStatus run_simplex(Tableau& tab, std::size_t& iterations) {
  bool bland = false;
  double best_seen = std::numeric_limits<double>::infinity();
  std::size_t stalled = 0;

  while (true) {
    if (iterations >= kIterationCap) return CoreStatus::iteration_cap;

    std::size_t enter = tab.width;
    if (!bland) {
      double best = -kReducedCostTol;
      std::int64_t best_key = 0;
      for (std::size_t c = 0; c < tab.width; ++c) {
        if (!tab.enterable[c]) continue;
        const double r = tab.z[c];
        if (r >= -kReducedCostTol) continue;
        if (enter == tab.width || r < best || (r == best && tab.key[c] < best_key)) {
          enter = c;
          best = r;
          best_key = tab.key[c];
        }
      }
    } else {
      std::int64_t best_key = 0;
      for (std::size_t c = 0; c < tab.width; ++c) {
        if (!tab.enterable[c] || tab.z[c] >= -kReducedCostTol) continue;
        if (enter == tab.width || tab.key[c] < best_key) {
          enter = c;
          best_key = tab.key[c];
        }
      }
    }
    if (enter == tab.width) return CoreStatus::optimal;

    std::size_t leave = tab.m;
    double best_ratio = 0.0;
    for (std::size_t r = 0; r < tab.m; ++r) {
      const double a = tab.t[r * (tab.width + 1) + enter];
      if (a <= kPivotTol) continue;
      const double ratio = std::max(tab.rhs(r), 0.0) / a;
      if (leave == tab.m || ratio < best_ratio ||
          (ratio == best_ratio && tab.key[tab.basis[r]] < tab.key[tab.basis[leave]])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == tab.m) return CoreStatus::unbounded;

    tab.pivot(leave, enter);
    ++iterations;

    if (tab.objective < best_seen - 1e-12 * (1.0 + std::fabs(best_seen))) {
      best_seen = tab.objective;
      stalled = 0;
    } else if (!bland && ++stalled > kStallLimit) {
      bland = true;  // permanent: guarantees termination
    }
  }
}

}  // namespace

SimplexResult solve_standard_lp(const StandardLP& lp, const std::vector<std::size_t>* seed_basis) {
  SimplexResult res;
  const std::size_t m = lp.rows;
  const std::size_t n = lp.cols;
  res.x.assign(n, 0.0);
  if (m == 0) {
    res.status = LpStatus::optimal;
    return res;
  }

  Tableau tab;
  tab.m = m;
  if (!lp.key.empty()) {
    tab.key = lp.key;
  } else {
    tab.key.resize(n);
    for (std::size_t c = 0; c < n; ++c) tab.key[c] = static_cast<std::int64_t>(c);
  }

  bool seeded = false;
  if (seed_basis && seed_basis->size() == m) {
    // Canonicalize the tableau for the caller's basis via Gauss-Jordan.
    tab.width = n;
    tab.t.assign(m * (n + 1), 0.0);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < n; ++c) tab.at(r, c) = lp.a[r * n + c];
      tab.rhs_ref(r) = lp.b[r];
    }
    tab.basis = *seed_basis;
    seeded = true;
    for (std::size_t i = 0; i < m && seeded; ++i) {
      const std::size_t col = tab.basis[i];
      std::size_t prow = i;
      double best = std::fabs(tab.at(i, col));
      for (std::size_t r = i + 1; r < m; ++r) {
        const double v = std::fabs(tab.at(r, col));
        if (v > best) {
          best = v;
          prow = r;
        }
      }
      if (best <= kPivotTol) {
        seeded = false;
        break;
      }
      if (prow != i)
        for (std::size_t c = 0; c <= n; ++c) std::swap(tab.at(i, c), tab.at(prow, c));
      const double pv = tab.at(i, col);
      if (pv != 1.0)
        for (std::size_t c = 0; c <= n; ++c) tab.at(i, c) /= pv;
      for (std::size_t r = 0; r < m; ++r) {
        if (r == i) continue;
        const double f = tab.at(r, col);
        if (f == 0.0) continue;
        for (std::size_t c = 0; c <= n; ++c) tab.at(r, c) -= f * tab.at(i, c);
        tab.at(r, col) = 0.0;
      }
    }
    if (seeded)
      for (std::size_t r = 0; r < m; ++r)
        if (tab.rhs(r) < -kReducedCostTol) {
          seeded = false;
          break;
        }
  }

  std::vector<char> artificial;
  if (!seeded) {
    // Phase 1 with artificials.
    tab.width = n + m;
    tab.t.assign(m * (tab.width + 1), 0.0);
    tab.basis.resize(m);
    tab.key.resize(tab.width);
    for (std::size_t r = 0; r < m; ++r) {
      const double sign = lp.b[r] < 0.0 ? -1.0 : 1.0;
      for (std::size_t c = 0; c < n; ++c) tab.at(r, c) = sign * lp.a[r * n + c];
      tab.at(r, n + r) = 1.0;
      tab.rhs_ref(r) = sign * lp.b[r];
      tab.basis[r] = n + r;
      tab.key[n + r] = static_cast<std::int64_t>(1) << 60 | static_cast<std::int64_t>(r);
    }
    artificial.assign(tab.width, 0);
    for (std::size_t c = n; c < tab.width; ++c) artificial[c] = 1;
    tab.enterable.assign(tab.width, 1);
    std::vector<double> phase1_cost(tab.width, 0.0);
    for (std::size_t c = n; c < tab.width; ++c) phase1_cost[c] = 1.0;
    tab.price(phase1_cost);
    const CoreStatus st = run_simplex(tab, res.iterations);
    if (st == CoreStatus::iteration_cap) {
      res.status = LpStatus::numeric_failure;
      return res;
    }
    if (tab.objective > 1e-7) {
      res.status = LpStatus::infeasible;
      return res;
    }
    // Drive remaining artificials out where a real pivot exists; a fully
    // zero row is redundant and keeps its zero-valued artificial, which is
    // barred from re-entering.
    for (std::size_t r = 0; r < m; ++r) {
      if (!artificial[tab.basis[r]]) continue;
      std::size_t pick = tab.width;
      for (std::size_t c = 0; c < n; ++c) {
        if (std::fabs(tab.at(r, c)) <= kPivotTol) continue;
        bool is_basic = false;
        for (std::size_t rr = 0; rr < m; ++rr)
          if (tab.basis[rr] == c) {
            is_basic = true;
            break;
          }
        if (is_basic) continue;
        if (pick == tab.width || tab.key[c] < tab.key[pick]) pick = c;
      }
      if (pick != tab.width) {
        tab.pivot(r, pick);
        ++res.iterations;
      }
    }
    for (std::size_t c = n; c < tab.width; ++c) tab.enterable[c] = 0;
  } else {
    tab.enterable.assign(tab.width, 1);
  }

  std::vector<double> cost(tab.width, 0.0);
  for (std::size_t c = 0; c < n; ++c) cost[c] = lp.c[c];
  tab.price(cost);
  const CoreStatus st = run_simplex(tab, res.iterations);
  if (st == CoreStatus::iteration_cap) {
    res.status = LpStatus::numeric_failure;
    return res;
  }
  if (st == CoreStatus::unbounded) {
    res.status = LpStatus::unbounded;
    return res;
  }

  // Recover the basic values with a fresh factorization of the original
  // columns; the incrementally updated tableau rhs carries accumulated
  // rounding that this discards.
  res.basis = tab.basis;
  std::vector<double> bmat(m * m, 0.0);
  std::vector<double> xb(lp.b);
  bool fresh = true;
  for (std::size_t r = 0; r < m && fresh; ++r)
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t col = tab.basis[i];
      bmat[r * m + i] = col < n ? lp.a[r * n + col] : (r == col - n ? 1.0 : 0.0);
    }
  fresh = lu_solve(bmat, xb, m);
  res.x.assign(n, 0.0);
  if (fresh) {
    for (std::size_t i = 0; i < m; ++i)
      if (tab.basis[i] < n) res.x[tab.basis[i]] = xb[i];
  } else {
    for (std::size_t i = 0; i < m; ++i)
      if (tab.basis[i] < n) res.x[tab.basis[i]] = std::max(tab.rhs(i), 0.0);
  }
  res.objective = 0.0;
  for (std::size_t c = 0; c < n; ++c) res.objective += lp.c[c] * res.x[c];
  res.status = LpStatus::optimal;
  return res;
}

}  // namespace dcm
