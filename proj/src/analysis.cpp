#include "dcm/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "dcm/linalg.hpp"

namespace dcm {

CorrelationResult correlation_matrix(const ProfileTable& table) {
  const std::size_t rows = table.rows.size();
  if (rows < 3) throw error("correlation needs at least 3 rows, got " + std::to_string(rows));
  CorrelationResult out;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t a = 0; a < 12; ++a) {
    for (std::size_t b = a; b < 12; ++b) {
      double sx = 0, sy = 0;
      std::size_t m = 0;
      for (const auto& row : table.rows) {
        const double x = row.values[a];
        const double y = row.values[b];
        if (!std::isfinite(x) || !std::isfinite(y)) continue;
        sx += x;
        sy += y;
        ++m;
      }
      out.excluded[a][b] = out.excluded[b][a] = rows - m;
      if (m < 3) {
        out.r[a][b] = out.r[b][a] = nan;
        continue;
      }
      const double mx = sx / static_cast<double>(m);
      const double my = sy / static_cast<double>(m);
      double cxy = 0, cxx = 0, cyy = 0;
      for (const auto& row : table.rows) {
        const double x = row.values[a];
        const double y = row.values[b];
        if (!std::isfinite(x) || !std::isfinite(y)) continue;
        cxy += (x - mx) * (y - my);
        cxx += (x - mx) * (x - mx);
        cyy += (y - my) * (y - my);
      }
      if (cxx == 0.0 || cyy == 0.0) {
        out.r[a][b] = out.r[b][a] = nan;
        continue;
      }
      double r = a == b ? 1.0 : cxy / std::sqrt(cxx * cyy);
      r = std::clamp(r, -1.0, 1.0);
      out.r[a][b] = out.r[b][a] = r;
    }
  }
  return out;
}

PCAResult pca(const ProfileTable& table) {
  PCAResult out;
  std::vector<const ComplexityProfile*> usable;
  for (const auto& row : table.rows) {
    const bool finite = std::all_of(row.values.begin(), row.values.end(),
                                    [](double v) { return std::isfinite(v); });
    if (finite)
      usable.push_back(&row);
  }
  out.excluded_rows = table.rows.size() - usable.size();
  if (out.excluded_rows > 0)
    out.warnings.push_back(std::to_string(out.excluded_rows) +
                           " row(s) with non-finite measures excluded");
  const std::size_t m = usable.size();
  if (m < 2) throw error("PCA needs at least 2 finite rows, got " + std::to_string(m));
  if (m < 13)
    out.warnings.push_back("only " + std::to_string(m) +
                           " usable rows; recommend at least 13 for a 12-measure PCA");

  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < 12; ++c) {
    double mean = 0;
    for (const auto* row : usable) mean += row->values[c];
    mean /= static_cast<double>(m);
    double var = 0;
    for (const auto* row : usable) {
      const double d = row->values[c] - mean;
      var += d * d;
    }
    var /= static_cast<double>(m);
    if (var == 0.0) {
      out.excluded_columns.push_back(kMeasureNames[c]);
      continue;
    }
    cols.push_back(c);
    out.columns.push_back(kMeasureNames[c]);
    out.means.push_back(mean);
    out.sds.push_back(std::sqrt(var));
  }
  if (!out.excluded_columns.empty())
    out.warnings.push_back(std::to_string(out.excluded_columns.size()) +
                           " zero-variance column(s) excluded");
  const std::size_t k = cols.size();
  if (k == 0) throw error("PCA: all columns have zero variance");

  // Standardized data and its correlation matrix.
  std::vector<double> x(m * k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < k; ++j)
      x[i * k + j] = (usable[i]->values[cols[j]] - out.means[j]) / out.sds[j];
  std::vector<double> corr(k * k, 0.0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      double s = 0;
      for (std::size_t i = 0; i < m; ++i) s += x[i * k + a] * x[i * k + b];
      corr[a * k + b] = corr[b * k + a] = s / static_cast<double>(m);
    }

  std::vector<double> eigenvalues, vectors;
  jacobi_eigen_symmetric(corr, k, eigenvalues, vectors);

  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return eigenvalues[a] > eigenvalues[b]; });

  double total = 0.0;
  for (double& ev : eigenvalues) {
    ev = std::max(ev, 0.0);
    total += ev;
  }
  out.loadings.resize(k);
  out.fractions.resize(k);
  for (std::size_t ci = 0; ci < k; ++ci) {
    const std::size_t src = order[ci];
    out.fractions[ci] = eigenvalues[src] / total;
    auto& v = out.loadings[ci];
    v.resize(k);
    for (std::size_t j = 0; j < k; ++j) v[j] = vectors[j * k + src];
    std::size_t arg = 0;
    for (std::size_t j = 1; j < k; ++j)
      if (std::fabs(v[j]) > std::fabs(v[arg])) arg = j;
    if (v[arg] < 0.0)
      for (double& e : v) e = -e;
  }
  return out;
}

}  // namespace dcm
