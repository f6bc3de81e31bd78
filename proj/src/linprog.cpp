#include "dcm/linprog.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dcm/rng.hpp"

namespace dcm {

LPInstance build_smith_system(const Dataset& ds) {
  LPInstance lp;
  lp.n = ds.size();
  lp.dim_aug = ds.dim() + 1;
  lp.z.resize(lp.n * lp.dim_aug);
  for (std::size_t i = 0; i < lp.n; ++i) {
    const double sign = ds.class_index(i) == 0 ? 1.0 : -1.0;
    const auto p = ds.point(i);
    for (std::size_t f = 0; f < ds.dim(); ++f) lp.z[i * lp.dim_aug + f] = sign * p[f];
    lp.z[i * lp.dim_aug + ds.dim()] = sign;
  }
  return lp;
}

StandardLP to_standard_form(const LPInstance& lp) {
  // Columns: [w+ | w- | t | surplus], rows are the margin constraints.
  const std::size_t m = lp.n;
  const std::size_t da = lp.dim_aug;
  StandardLP std_lp;
  std_lp.rows = m;
  std_lp.cols = 2 * da + 2 * m;
  std_lp.a.assign(m * std_lp.cols, 0.0);
  std_lp.b.assign(m, 1.0);
  std_lp.c.assign(std_lp.cols, 0.0);
  std_lp.key.resize(std_lp.cols);
  for (std::size_t i = 0; i < m; ++i) {
    double* row = &std_lp.a[i * std_lp.cols];
    for (std::size_t k = 0; k < da; ++k) {
      row[k] = lp.z[i * da + k];
      row[da + k] = -lp.z[i * da + k];
    }
    row[2 * da + i] = 1.0;
    row[2 * da + m + i] = -1.0;
    std_lp.c[2 * da + i] = 1.0;
  }
  // w+ and w- halves of one weight share a pivot key so tie-breaks are
  // invariant under the sign mirror a label swap induces.
  for (std::size_t k = 0; k < da; ++k) {
    std_lp.key[k] = static_cast<std::int64_t>(k);
    std_lp.key[da + k] = static_cast<std::int64_t>(k);
  }
  for (std::size_t i = 0; i < m; ++i) {
    std_lp.key[2 * da + i] = static_cast<std::int64_t>(da + i);
    std_lp.key[2 * da + m + i] = static_cast<std::int64_t>(da + m + i);
  }
  return std_lp;
}

LPSolution solve_lp(const LPInstance& lp) {
  const StandardLP std_lp = to_standard_form(lp);
  std::vector<std::size_t> seed_basis(lp.n);
  for (std::size_t i = 0; i < lp.n; ++i) seed_basis[i] = 2 * lp.dim_aug + i;

  const SimplexResult sr = solve_standard_lp(std_lp, &seed_basis);
  LPSolution sol;
  sol.iterations = sr.iterations;
  if (sr.status != LpStatus::optimal) {
    // The instance is always feasible (w=0, t=b) and bounded below by 0, so
    // anything but optimal is a numeric breakdown.
    sol.status = LpStatus::numeric_failure;
    return sol;
  }
  sol.w.resize(lp.dim_aug);
  for (std::size_t k = 0; k < lp.dim_aug; ++k) sol.w[k] = sr.x[k] - sr.x[lp.dim_aug + k];
  sol.t.resize(lp.n);
  for (std::size_t i = 0; i < lp.n; ++i) sol.t[i] = sr.x[2 * lp.dim_aug + i];
  sol.objective = std::accumulate(sol.t.begin(), sol.t.end(), 0.0);

  // Feasibility audit on the recovered vertex: Z'w + t >= b - tol, t >= -tol.
  double z_scale = 1.0;
  for (const double v : lp.z) z_scale = std::max(z_scale, std::fabs(v));
  const double tol = 1e-9 * z_scale;
  for (std::size_t i = 0; i < lp.n; ++i) {
    if (sol.t[i] < -tol) {
      sol.status = LpStatus::numeric_failure;
      return sol;
    }
    double margin = sol.t[i] - 1.0;
    for (std::size_t k = 0; k < lp.dim_aug; ++k) margin += lp.z[i * lp.dim_aug + k] * sol.w[k];
    if (margin < -tol) {
      sol.status = LpStatus::numeric_failure;
      return sol;
    }
  }
  sol.status = LpStatus::optimal;
  return sol;
}

int classify_linear(std::span<const double> w, std::span<const double> x) {
  if (w.size() != x.size() + 1) throw error("weight vector must have point dimension + 1 entries");
  double score = w[x.size()];
  for (std::size_t f = 0; f < x.size(); ++f) score += w[f] * x[f];
  return score > 0.0 ? 0 : 1;
}

namespace {

Dataset scale_dataset(const Dataset& ds, double factor) {
  std::vector<double> data(ds.raw());
  for (double& v : data) v *= factor;
  std::vector<std::uint8_t> cls(ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) cls[i] = ds.class_index(i);
  return Dataset::from_parts(ds.name(), ds.dim(), std::move(data), std::move(cls),
                             ds.class_labels());
}

double error_rate(const Dataset& ds, const std::vector<double>& w) {
  std::size_t errors = 0;
  for (std::size_t i = 0; i < ds.size(); ++i)
    if (classify_linear(w, ds.point(i)) != ds.class_index(i)) ++errors;
  return static_cast<double>(errors) / static_cast<double>(ds.size());
}

struct SolvedProblem {
  Dataset normalized;
  LPSolution solution;
  bool degenerate_diagonal = false;
};

SolvedProblem solve_normalized(const Dataset& ds) {
  SolvedProblem sp;
  const double diag = bounding_diagonal(ds);
  sp.degenerate_diagonal = diag == 0.0;
  sp.normalized = sp.degenerate_diagonal ? ds : scale_dataset(ds, 1.0 / diag);
  sp.solution = solve_lp(build_smith_system(sp.normalized));
  if (sp.solution.status != LpStatus::optimal)
    throw error("LP solver numeric failure on '" + ds.name() + "'");
  return sp;
}

}  // namespace

Dataset interpolated_test_set(const Dataset& ds, std::size_t m, std::uint64_t seed) {
  if (m == 0) throw error("test set size must be positive");
  const std::size_t dim = ds.dim();

  // Canonical draw order: within each class sort point indices by
  // coordinates; order the classes by comparing those sorted point
  // sequences (label order breaks full geometric ties).
  std::array<std::vector<std::size_t>, 2> groups;
  for (std::size_t i = 0; i < ds.size(); ++i) groups[ds.class_index(i)].push_back(i);
  auto coord_less = [&](std::size_t a, std::size_t b) {
    const auto pa = ds.point(a);
    const auto pb = ds.point(b);
    return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
  };
  std::sort(groups[0].begin(), groups[0].end(), coord_less);
  std::sort(groups[1].begin(), groups[1].end(), coord_less);

  int first = 0;
  {
    const std::size_t common = std::min(groups[0].size(), groups[1].size());
    int cmp = 0;
    for (std::size_t i = 0; i < common && cmp == 0; ++i) {
      const auto pa = ds.point(groups[0][i]);
      const auto pb = ds.point(groups[1][i]);
      for (std::size_t f = 0; f < dim && cmp == 0; ++f)
        cmp = pa[f] < pb[f] ? -1 : (pa[f] > pb[f] ? 1 : 0);
    }
    if (cmp == 0 && groups[0].size() != groups[1].size())
      cmp = groups[0].size() < groups[1].size() ? -1 : 1;
    first = cmp <= 0 ? 0 : 1;
  }

  SplitMix64 rng(seed);
  const double frac_first =
      static_cast<double>(groups[first].size()) / static_cast<double>(ds.size());
  std::vector<double> data;
  data.reserve(m * dim);
  std::vector<std::uint8_t> cls(m);
  for (std::size_t k = 0; k < m; ++k) {
    const int g = rng.uniform() < frac_first ? first : 1 - first;
    const auto& idx = groups[g];
    const auto p = ds.point(idx[rng.uniform_index(idx.size())]);
    const auto q = ds.point(idx[rng.uniform_index(idx.size())]);
    const double alpha = rng.uniform();
    for (std::size_t f = 0; f < dim; ++f) data.push_back(p[f] + alpha * (q[f] - p[f]));
    cls[k] = static_cast<std::uint8_t>(g);
  }
  return Dataset::from_parts(ds.name() + ":interp", dim, std::move(data), std::move(cls),
                             ds.class_labels());
}

double l1_error_distance(const Dataset& ds) {
  const SolvedProblem sp = solve_normalized(ds);
  return std::max(0.0, sp.solution.objective) / static_cast<double>(ds.size());
}

double l2_linear_error(const Dataset& ds) {
  const SolvedProblem sp = solve_normalized(ds);
  return error_rate(sp.normalized, sp.solution.w);
}

double l3_linear_nonlinearity(const Dataset& ds, std::uint64_t seed) {
  const SolvedProblem sp = solve_normalized(ds);
  return error_rate(interpolated_test_set(sp.normalized, ds.size(), seed), sp.solution.w);
}

LinearMeasures linear_measures(const Dataset& ds, std::uint64_t seed) {
  const SolvedProblem sp = solve_normalized(ds);
  LinearMeasures lm;
  lm.degenerate_diagonal = sp.degenerate_diagonal;
  lm.l1 = std::max(0.0, sp.solution.objective) / static_cast<double>(ds.size());
  lm.l2 = error_rate(sp.normalized, sp.solution.w);
  lm.l3 = error_rate(interpolated_test_set(sp.normalized, ds.size(), seed), sp.solution.w);
  return lm;
}

}  // namespace dcm
