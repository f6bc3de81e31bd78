#include "dcm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dcm {

bool lu_solve(std::vector<double>& a, std::vector<double>& rhs, std::size_t n, double tol) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = std::fabs(a[perm[col] * n + col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::fabs(a[perm[r] * n + col]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best <= tol) return false;
    std::swap(perm[col], perm[piv]);
    const double pivot = a[perm[col] * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = a[perm[r] * n + col] / pivot;
      a[perm[r] * n + col] = factor;
      for (std::size_t c = col + 1; c < n; ++c) a[perm[r] * n + c] -= factor * a[perm[col] * n + c];
      rhs[perm[r]] -= factor * rhs[perm[col]];
    }
  }
  std::vector<double> x(n);
  for (std::size_t ri = n; ri-- > 0;) {
    double v = rhs[perm[ri]];
    for (std::size_t c = ri + 1; c < n; ++c) v -= a[perm[ri] * n + c] * x[c];
    x[ri] = v / a[perm[ri] * n + ri];
  }
  rhs = std::move(x);
  return true;
}

namespace {

double off_diagonal_norm(const std::vector<double>& m, std::size_t k) {
  double s = 0.0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) s += m[i * k + j] * m[i * k + j];
  return std::sqrt(s);
}

}  // namespace

void jacobi_eigen_symmetric(std::vector<double> m, std::size_t k, std::vector<double>& eigenvalues,
                            std::vector<double>& vectors, double off_tol) {
  vectors.assign(k * k, 0.0);
  for (std::size_t i = 0; i < k; ++i) vectors[i * k + i] = 1.0;
  eigenvalues.assign(k, 0.0);
  if (k == 0) return;

  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps && off_diagonal_norm(m, k) >= off_tol; ++sweep) {
    for (std::size_t p = 0; p + 1 < k; ++p) {
      for (std::size_t q = p + 1; q < k; ++q) {
        const double apq = m[p * k + q];
        if (apq == 0.0) continue;
        const double app = m[p * k + p];
        const double aqq = m[q * k + q];
        const double theta = (aqq - app) / (2.0 * apq);
        // stable tangent of the rotation angle
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t i = 0; i < k; ++i) {
          const double mip = m[i * k + p];
          const double miq = m[i * k + q];
          m[i * k + p] = c * mip - s * miq;
          m[i * k + q] = s * mip + c * miq;
        }
        for (std::size_t i = 0; i < k; ++i) {
          const double mpi = m[p * k + i];
          const double mqi = m[q * k + i];
          m[p * k + i] = c * mpi - s * mqi;
          m[q * k + i] = s * mpi + c * mqi;
        }
        for (std::size_t i = 0; i < k; ++i) {
          const double vip = vectors[i * k + p];
          const double viq = vectors[i * k + q];
          vectors[i * k + p] = c * vip - s * viq;
          vectors[i * k + q] = s * vip + c * viq;
        }
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) eigenvalues[i] = m[i * k + i];
}

}  // namespace dcm
