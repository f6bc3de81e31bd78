#include "dcm/overlap.hpp"

#include <algorithm>
#include <limits>

namespace dcm {

OverlapBounds overlap_bounds(const FeatureStats& st) {
  const std::size_t d = st.features();
  OverlapBounds b;
  b.minmax.resize(d);
  b.maxmin.resize(d);
  b.maxmax.resize(d);
  b.minmin.resize(d);
  for (std::size_t f = 0; f < d; ++f) {
    b.minmax[f] = std::min(st.max[f][0], st.max[f][1]);
    b.maxmin[f] = std::max(st.min[f][0], st.min[f][1]);
    b.maxmax[f] = std::max(st.max[f][0], st.max[f][1]);
    b.minmin[f] = std::min(st.min[f][0], st.min[f][1]);
  }
  return b;
}

double f1_max_fisher(const Dataset& ds) {
  const FeatureStats st = feature_stats(ds);
  double best = 0.0;
  for (std::size_t f = 0; f < st.features(); ++f) {
    const double num = (st.mean[f][0] - st.mean[f][1]) * (st.mean[f][0] - st.mean[f][1]);
    const double den = st.variance[f][0] + st.variance[f][1];
    double ratio;
    if (den == 0.0)
      ratio = num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    else
      ratio = num / den;
    best = std::max(best, ratio);
  }
  return best;
}

double f2_overlap_volume(const Dataset& ds) {
  const OverlapBounds b = overlap_bounds(feature_stats(ds));
  double volume = 1.0;
  for (std::size_t f = 0; f < b.minmax.size(); ++f) {
    const double den = b.maxmax[f] - b.minmin[f];
    if (den == 0.0) continue;  // degenerate feature, full overlap of a point range
    volume *= std::max(0.0, b.minmax[f] - b.maxmin[f]) / den;
  }
  return volume;
}

double f3_max_feature_efficiency(const Dataset& ds) {
  const OverlapBounds b = overlap_bounds(feature_stats(ds));
  const std::size_t n = ds.size();
  std::size_t best = 0;
  for (std::size_t f = 0; f < b.minmax.size(); ++f) {
    std::size_t separable = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double v = ds.point(i)[f];
      if (v < b.maxmin[f] || v > b.minmax[f]) ++separable;
    }
    best = std::max(best, separable);
  }
  return static_cast<double>(best) / static_cast<double>(n);
}

}  // namespace dcm
