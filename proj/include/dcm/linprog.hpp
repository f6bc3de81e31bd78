#ifndef DCM_LINPROG_HPP
#define DCM_LINPROG_HPP

#include <cstdint>

#include "dcm/dataset.hpp"
#include "dcm/simplex.hpp"

namespace dcm {

/// Solver identity reported in profile metadata.
inline constexpr const char* kSolverId = "dense-two-phase-simplex-v1";

/// Smith's error-distance system. Row i holds the signed augmented point
/// z_i = +(x_i, 1) for class 1 and -(x_i, 1) for class 2; the program is
/// minimize sum(t) subject to z_i . w + t_i >= 1, t >= 0.
struct LPInstance {
  std::size_t n = 0;
  std::size_t dim_aug = 0;   // d + 1
  std::vector<double> z;     // n * dim_aug, row-major

  std::span<const double> row(std::size_t i) const { return {z.data() + i * dim_aug, dim_aug}; }
};

struct LPSolution {
  LpStatus status = LpStatus::numeric_failure;
  std::vector<double> w;  // dim_aug
  std::vector<double> t;  // n, >= -1e-9
  double objective = 0.0;
  std::size_t iterations = 0;
};

LPInstance build_smith_system(const Dataset& ds);

/// Standard-form encoding of an instance (w split into a nonnegative pair,
/// one surplus column per constraint). Exposed for the enumeration oracle.
StandardLP to_standard_form(const LPInstance& lp);

/// Solves the instance from the always-feasible error-vector basis and
/// verifies the margin residuals; any violation beyond 1e-9 (unit-scaled
/// data) surfaces as numeric_failure rather than a silently clamped result.
LPSolution solve_lp(const LPInstance& lp);

/// 0 -> class 1 (score > 0), 1 -> class 2 (score <= 0; exact ties go to
/// class 2). w has d+1 entries, x has d.
int classify_linear(std::span<const double> w, std::span<const double> x);

/// L1: Smith objective of the dataset rescaled to unit bounding diagonal,
/// divided by the point count. A degenerate (zero) diagonal skips the
/// rescale, leaving the divisor at 1.
double l1_error_distance(const Dataset& ds);

/// L2: training error rate of the L1 classifier.
double l2_linear_error(const Dataset& ds);

/// Test set of m points interpolated within classes: class picked in
/// proportion to class size, endpoints drawn uniformly with replacement,
/// blend factor uniform in [0,1]. Draws are anchored to a canonical ordering
/// of the classes (points sorted by coordinates), so the output is invariant
/// under label renaming and point reordering. Degenerate draws may touch a
/// single class.
Dataset interpolated_test_set(const Dataset& ds, std::size_t m, std::uint64_t seed);

/// L3: error rate of the L1 classifier on interpolated_test_set(ds, n, seed).
double l3_linear_nonlinearity(const Dataset& ds, std::uint64_t seed);

struct LinearMeasures {
  double l1 = 0.0;
  double l2 = 0.0;
  double l3 = 0.0;
  bool degenerate_diagonal = false;
};

/// One solve shared by the three measures.
LinearMeasures linear_measures(const Dataset& ds, std::uint64_t seed);

}  // namespace dcm

#endif
