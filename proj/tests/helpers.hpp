#ifndef DCM_TESTS_HELPERS_HPP
#define DCM_TESTS_HELPERS_HPP

#include <cmath>
#include <numeric>
#include <vector>

#include "dcm/dataset.hpp"
#include "dcm/rng.hpp"

namespace dcm::testing {

inline Dataset make_dataset(const std::vector<std::vector<double>>& rows,
                            const std::vector<std::string>& labels, std::string name = "fixture") {
  return validate_dataset(rows, labels, std::move(name));
}

/// 1-D two-class fixture from coordinate lists.
inline Dataset make_1d(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<std::vector<double>> rows;
  std::vector<std::string> labels;
  for (double v : a) {
    rows.push_back({v});
    labels.push_back("A");
  }
  for (double v : b) {
    rows.push_back({v});
    labels.push_back("B");
  }
  return make_dataset(rows, labels);
}

/// Same points, class assignment inverted (the label strings stay put).
inline Dataset label_swap(const Dataset& ds) {
  std::vector<std::vector<double>> rows;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    rows.emplace_back(ds.point(i).begin(), ds.point(i).end());
    labels.push_back(ds.class_labels()[1 - ds.class_index(i)]);
  }
  return validate_dataset(rows, labels, ds.name());
}

inline Dataset reorder(const Dataset& ds, const std::vector<std::size_t>& perm) {
  std::vector<std::vector<double>> rows;
  std::vector<std::string> labels;
  for (const std::size_t i : perm) {
    rows.emplace_back(ds.point(i).begin(), ds.point(i).end());
    labels.push_back(ds.label(i));
  }
  return validate_dataset(rows, labels, ds.name());
}

inline Dataset shuffled(const Dataset& ds, std::uint64_t seed) {
  std::vector<std::size_t> perm(ds.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  SplitMix64 rng(seed);
  for (std::size_t i = perm.size(); i > 1; --i)
    std::swap(perm[i - 1], perm[rng.uniform_index(i)]);
  return reorder(ds, perm);
}

/// x -> scale * R * x + shift with R a random rotation (product of seeded
/// Givens rotations over all coordinate planes).
inline Dataset similarity_transform(const Dataset& ds, double scale, double shift_step,
                                    std::uint64_t rotation_seed) {
  const std::size_t d = ds.dim();
  std::vector<double> rot(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) rot[i * d + i] = 1.0;
  SplitMix64 rng(rotation_seed);
  for (std::size_t p = 0; p + 1 < d; ++p) {
    for (std::size_t q = p + 1; q < d; ++q) {
      const double theta = 2.0 * 3.14159265358979323846 * rng.uniform();
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      for (std::size_t col = 0; col < d; ++col) {
        const double rp = rot[p * d + col];
        const double rq = rot[q * d + col];
        rot[p * d + col] = c * rp - s * rq;
        rot[q * d + col] = s * rp + c * rq;
      }
    }
  }
  std::vector<std::vector<double>> rows;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const auto x = ds.point(i);
    std::vector<double> y(d, 0.0);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) y[r] += rot[r * d + c] * x[c];
      y[r] = scale * y[r] + shift_step * static_cast<double>(r + 1);
    }
    rows.push_back(std::move(y));
    labels.push_back(ds.label(i));
  }
  return validate_dataset(rows, labels, ds.name());
}

/// Per-feature affine map x_f -> a_f * x_f + b_f.
inline Dataset per_feature_affine(const Dataset& ds, const std::vector<double>& a,
                                  const std::vector<double>& b) {
  std::vector<std::vector<double>> rows;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const auto x = ds.point(i);
    std::vector<double> y(ds.dim());
    for (std::size_t f = 0; f < ds.dim(); ++f) y[f] = a[f] * x[f] + b[f];
    rows.push_back(std::move(y));
    labels.push_back(ds.label(i));
  }
  return validate_dataset(rows, labels, ds.name());
}

inline Dataset with_duplicated_feature(const Dataset& ds, std::size_t feature) {
  std::vector<std::vector<double>> rows;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    std::vector<double> y(ds.point(i).begin(), ds.point(i).end());
    y.push_back(y[feature]);
    rows.push_back(std::move(y));
    labels.push_back(ds.label(i));
  }
  return validate_dataset(rows, labels, ds.name());
}

}  // namespace dcm::testing

#endif
