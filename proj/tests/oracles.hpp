#ifndef DCM_TESTS_ORACLES_HPP
#define DCM_TESTS_ORACLES_HPP

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "dcm/simplex.hpp"

namespace dcm::testing {

/// Plain Gaussian elimination so the oracle shares nothing with the library
/// solve path.
inline std::optional<std::vector<double>> gauss_solve(std::vector<double> a,
                                                      std::vector<double> rhs, std::size_t n) {
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(a[r * n + col]) > std::fabs(a[piv * n + col])) piv = r;
    if (std::fabs(a[piv * n + col]) < 1e-10) return std::nullopt;
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[col * n + c], a[piv * n + c]);
      std::swap(rhs[col], rhs[piv]);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r * n + col] / a[col * n + col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
      rhs[r] -= f * rhs[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= a[i * n + i];
  return rhs;
}

struct BfsOptimum {
  double objective = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> optimal_vertices;  // all x achieving it (1e-9)
};

/// Exhaustive basic-feasible-solution enumeration for min c'x, Ax=b, x>=0.
/// Only viable for tiny instances.
inline BfsOptimum lp_enumerate_bfs(const StandardLP& lp) {
  BfsOptimum out;
  const std::size_t m = lp.rows;
  const std::size_t n = lp.cols;
  std::vector<std::size_t> pick(m);
  for (std::size_t i = 0; i < m; ++i) pick[i] = i;

  const auto consider = [&](const std::vector<std::size_t>& cols) {
    std::vector<double> bmat(m * m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t i = 0; i < m; ++i) bmat[r * m + i] = lp.a[r * n + cols[i]];
    const auto solved = gauss_solve(std::move(bmat), lp.b, m);
    if (!solved) return;
    for (const double v : *solved)
      if (v < -1e-9) return;
    double obj = 0.0;
    for (std::size_t i = 0; i < m; ++i) obj += lp.c[cols[i]] * (*solved)[i];
    if (obj < out.objective - 1e-9) {
      out.objective = obj;
      out.optimal_vertices.clear();
    }
    if (obj <= out.objective + 1e-9) {
      std::vector<double> x(n, 0.0);
      for (std::size_t i = 0; i < m; ++i) x[cols[i]] = (*solved)[i];
      out.optimal_vertices.push_back(std::move(x));
      if (obj < out.objective) out.objective = obj;
    }
  };

  // iterate all m-subsets of columns
  while (true) {
    consider(pick);
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (pick[i] != n - m + i) break;
      if (i == 0) return out;
    }
    ++pick[i];
    for (std::size_t j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
}

/// Minimum spanning tree weight by exhaustive enumeration of all labeled
/// trees (Prufer decode); n <= 8 or so.
inline double mst_weight_by_enumeration(const std::vector<std::vector<double>>& dist) {
  const std::size_t n = dist.size();
  if (n == 2) return dist[0][1];
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> prufer(n - 2, 0);
  while (true) {
    // decode the sequence into tree edges
    std::vector<std::size_t> degree(n, 1);
    for (const std::size_t v : prufer) ++degree[v];
    double weight = 0.0;
    std::vector<char> used(n, 0);
    std::vector<std::size_t> deg = degree;
    for (const std::size_t v : prufer) {
      std::size_t leaf = n;
      for (std::size_t u = 0; u < n; ++u)
        if (deg[u] == 1 && !used[u]) {
          leaf = u;
          break;
        }
      used[leaf] = 1;
      weight += dist[leaf][v];
      --deg[v];
    }
    std::size_t u1 = n, u2 = n;
    for (std::size_t u = 0; u < n; ++u)
      if (!used[u] && deg[u] == 1) (u1 == n ? u1 : u2) = u;
    weight += dist[u1][u2];
    best = std::min(best, weight);

    std::size_t i = prufer.size();
    while (i > 0) {
      --i;
      if (++prufer[i] < n) break;
      prufer[i] = 0;
      if (i == 0) return best;
    }
  }
}

}  // namespace dcm::testing

#endif
