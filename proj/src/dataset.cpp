#include "dcm/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace dcm {

Dataset Dataset::from_parts(std::string name, std::size_t dim, std::vector<double> data,
                            std::vector<std::uint8_t> cls, std::array<std::string, 2> class_labels) {
  Dataset ds;
  ds.name_ = std::move(name);
  ds.dim_ = dim;
  ds.data_ = std::move(data);
  ds.cls_ = std::move(cls);
  ds.class_labels_ = std::move(class_labels);
  ds.n0_ = static_cast<std::size_t>(std::count(ds.cls_.begin(), ds.cls_.end(), std::uint8_t{0}));
  return ds;
}

namespace {

Dataset build_validated(std::vector<double> flat, std::size_t dim,
                        const std::vector<std::string>& labels, std::string name) {
  const std::size_t n = labels.size();
  if (n == 0) throw error("dataset is empty");
  if (dim == 0) throw error("points must have at least one coordinate");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t f = 0; f < dim; ++f) {
      if (!std::isfinite(flat[i * dim + f]))
        throw error("row " + std::to_string(i) + ": non-finite value in column " + std::to_string(f));
    }
  }
  std::set<std::string> distinct(labels.begin(), labels.end());
  if (distinct.size() != 2)
    throw error("expected exactly two classes, found " + std::to_string(distinct.size()));
  std::array<std::string, 2> class_labels{*distinct.begin(), *std::next(distinct.begin())};
  std::vector<std::uint8_t> cls(n);
  for (std::size_t i = 0; i < n; ++i) cls[i] = labels[i] == class_labels[0] ? 0 : 1;
  return Dataset::from_parts(std::move(name), dim, std::move(flat), std::move(cls),
                             std::move(class_labels));
}

}  // namespace

Dataset validate_dataset(const std::vector<std::vector<double>>& rows,
                         const std::vector<std::string>& labels, std::string name) {
  if (rows.empty()) throw error("dataset is empty");
  if (labels.size() != rows.size())
    throw error("labels length " + std::to_string(labels.size()) + " != row count " +
                std::to_string(rows.size()));
  const std::size_t dim = rows[0].size();
  std::vector<double> flat;
  flat.reserve(rows.size() * dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim)
      throw error("row " + std::to_string(i) + ": expected " + std::to_string(dim) +
                  " columns, got " + std::to_string(rows[i].size()));
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return build_validated(std::move(flat), dim, labels, std::move(name));
}

Dataset validate_dataset(std::vector<double> flat, std::size_t dim,
                         const std::vector<std::string>& labels, std::string name) {
  if (labels.empty()) throw error("dataset is empty");
  if (dim == 0 || flat.size() != labels.size() * dim)
    throw error("flat data size " + std::to_string(flat.size()) + " does not match " +
                std::to_string(labels.size()) + " points of dimension " + std::to_string(dim));
  return build_validated(std::move(flat), dim, labels, std::move(name));
}

double euclidean_distance(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size())
    throw error("dimension mismatch: " + std::to_string(p.size()) + " vs " +
                std::to_string(q.size()));
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = p[i] - q[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double bounding_diagonal(const Dataset& ds) {
  double s = 0.0;
  for (std::size_t f = 0; f < ds.dim(); ++f) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < ds.size(); ++i) {
      const double v = ds.point(i)[f];
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    s += (hi - lo) * (hi - lo);
  }
  return std::sqrt(s);
}

ClassSplit split_classes(const Dataset& ds) {
  ClassSplit split;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (ds.class_index(i) == 0)
      split.class1_indices.push_back(i);
    else
      split.class2_indices.push_back(i);
  }
  split.n1 = split.class1_indices.size();
  split.n2 = split.class2_indices.size();
  return split;
}

FeatureStats feature_stats(const Dataset& ds) {
  const std::size_t d = ds.dim();
  FeatureStats st;
  st.mean.assign(d, {0.0, 0.0});
  st.variance.assign(d, {0.0, 0.0});
  st.min.assign(d, {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()});
  st.max.assign(d, {-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()});

  const std::array<double, 2> counts{static_cast<double>(ds.class_count(0)),
                                     static_cast<double>(ds.class_count(1))};
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const auto c = ds.class_index(i);
    const auto p = ds.point(i);
    for (std::size_t f = 0; f < d; ++f) {
      st.mean[f][c] += p[f];
      st.min[f][c] = std::min(st.min[f][c], p[f]);
      st.max[f][c] = std::max(st.max[f][c], p[f]);
    }
  }
  for (std::size_t f = 0; f < d; ++f)
    for (int c = 0; c < 2; ++c) st.mean[f][c] /= counts[c];

  for (std::size_t i = 0; i < ds.size(); ++i) {
    const auto c = ds.class_index(i);
    const auto p = ds.point(i);
    for (std::size_t f = 0; f < d; ++f) {
      const double dev = p[f] - st.mean[f][c];
      st.variance[f][c] += dev * dev;
    }
  }
  for (std::size_t f = 0; f < d; ++f)
    for (int c = 0; c < 2; ++c) st.variance[f][c] = std::max(0.0, st.variance[f][c] / counts[c]);
  return st;
}

}  // namespace dcm
