#ifndef DCM_DATASET_HPP
#define DCM_DATASET_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcm {

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Non-owning view over n points of dimension dim, stored row-major.
struct PointsView {
  const double* data = nullptr;
  std::size_t n = 0;
  std::size_t dim = 0;

  std::span<const double> point(std::size_t i) const { return {data + i * dim, dim}; }
};

/// Immutable two-class labeled point set. Class 0 is the lexicographically
/// smaller label; construct through validate_dataset (or the generators),
/// which enforce the invariants. Interpolated test sets reuse this type and
/// may degenerately contain points of a single class.
class Dataset {
public:
  Dataset() = default;

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return cls_.size(); }

  std::span<const double> point(std::size_t i) const { return {data_.data() + i * dim_, dim_}; }
  PointsView points() const { return {data_.data(), cls_.size(), dim_}; }
  const std::vector<double>& raw() const { return data_; }

  std::uint8_t class_index(std::size_t i) const { return cls_[i]; }
  const std::string& label(std::size_t i) const { return class_labels_[cls_[i]]; }
  const std::array<std::string, 2>& class_labels() const { return class_labels_; }

  std::size_t class_count(std::uint8_t c) const { return c == 0 ? n0_ : size() - n0_; }

  /// Unchecked assembly from parts already in canonical form (class_labels
  /// sorted, cls entries 0/1). Internal plumbing for generators, subsetting
  /// and test sets.
  static Dataset from_parts(std::string name, std::size_t dim, std::vector<double> data,
                            std::vector<std::uint8_t> cls, std::array<std::string, 2> class_labels);

private:
  std::string name_;
  std::size_t dim_ = 0;
  std::vector<double> data_;             // size() * dim_, row-major
  std::vector<std::uint8_t> cls_;        // 0/1 per point
  std::array<std::string, 2> class_labels_{};
  std::size_t n0_ = 0;
};

/// Index partition of a dataset by class; class1 is the lexicographically
/// smaller label.
struct ClassSplit {
  std::vector<std::size_t> class1_indices;
  std::vector<std::size_t> class2_indices;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
};

/// Per-feature, per-class moments and ranges. Variances use the population
/// convention (divide by the class size); a single-point class has variance 0.
struct FeatureStats {
  // indexed [feature][class]
  std::vector<std::array<double, 2>> mean;
  std::vector<std::array<double, 2>> variance;
  std::vector<std::array<double, 2>> min;
  std::vector<std::array<double, 2>> max;

  std::size_t features() const { return mean.size(); }
};

/// Validates rows/labels and builds an immutable Dataset.
/// Rejects empty input, ragged rows, non-finite coordinates and label lists
/// with anything other than exactly two distinct values; messages name the
/// offending row.
Dataset validate_dataset(const std::vector<std::vector<double>>& rows,
                         const std::vector<std::string>& labels, std::string name = "");

/// Same contract, flat row-major input.
Dataset validate_dataset(std::vector<double> flat, std::size_t dim,
                         const std::vector<std::string>& labels, std::string name = "");

double euclidean_distance(std::span<const double> p, std::span<const double> q);

/// Length of the diagonal of the bounding hyperrectangle of all points.
double bounding_diagonal(const Dataset& ds);

ClassSplit split_classes(const Dataset& ds);

FeatureStats feature_stats(const Dataset& ds);

}  // namespace dcm

#endif
