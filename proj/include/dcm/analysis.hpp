#ifndef DCM_ANALYSIS_HPP
#define DCM_ANALYSIS_HPP

#include "dcm/profile.hpp"

namespace dcm {

struct ProfileTable {
  std::vector<ComplexityProfile> rows;
};

/// Pearson correlations between measure columns. Rows holding a non-finite
/// value in either column of a pair drop out of that pair only; the exclusion
/// count is recorded per pair. Entries that cannot be computed (a constant
/// column, or fewer than 3 usable rows for the pair) are NaN.
struct CorrelationResult {
  std::array<std::array<double, 12>, 12> r{};
  std::array<std::array<std::size_t, 12>, 12> excluded{};
};

/// Requires at least 3 rows.
CorrelationResult correlation_matrix(const ProfileTable& table);

/// PCA over standardized measure columns (correlation form): rows with any
/// non-finite measure are dropped, constant columns excluded, and the
/// correlation matrix eigendecomposed by cyclic Jacobi (1e-12 off-diagonal
/// norm). Components are sorted by explained variance with the
/// largest-magnitude loading of each made positive.
struct PCAResult {
  std::vector<std::string> columns;             // measures retained
  std::vector<std::string> excluded_columns;    // zero variance
  std::size_t excluded_rows = 0;                // non-finite sentinels
  std::vector<double> means;                    // per retained column
  std::vector<double> sds;
  std::vector<std::vector<double>> loadings;    // [component][column], orthonormal
  std::vector<double> fractions;                // nonincreasing, sums to 1
  std::vector<std::string> warnings;
};

PCAResult pca(const ProfileTable& table);

}  // namespace dcm

#endif
