#ifndef DCM_SIMPLEX_HPP
#define DCM_SIMPLEX_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dcm {

enum class LpStatus { optimal, infeasible, unbounded, numeric_failure };

/// Standard-form linear program: minimize c'x subject to a*x = b, x >= 0.
/// key assigns each column a deterministic pivot-preference key; columns that
/// represent the two halves of one free variable should share a key so that
/// pivot tie-breaks are invariant under sign mirroring of the instance.
struct StandardLP {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;  // rows*cols, row-major
  std::vector<double> b;  // rows
  std::vector<double> c;  // cols
  std::vector<std::int64_t> key;  // cols; empty -> column index
};

struct SimplexResult {
  LpStatus status = LpStatus::numeric_failure;
  double objective = 0.0;
  std::vector<double> x;            // cols; basic values recovered by a fresh LU solve
  std::vector<std::size_t> basis;   // rows
  std::size_t iterations = 0;
};

/// Dense two-phase simplex. Entering variable: most negative reduced cost
/// (ties by key, then column); after a stall window the rule permanently
/// degrades to Bland's (lowest key with negative reduced cost) to break
/// cycles. Leaving variable: minimum ratio, ties by the basic variable's key.
/// All choices are deterministic, so repeated runs agree bit for bit.
///
/// seed_basis, when given, must name rows distinct columns; if they form a
/// feasible basis phase 1 is skipped. Pivots smaller than 1e-12 are never
/// taken; an entering column without an admissible pivot reports unbounded,
/// and exceeding the iteration cap reports numeric_failure.
SimplexResult solve_standard_lp(const StandardLP& lp,
                                const std::vector<std::size_t>* seed_basis = nullptr);

}  // namespace dcm

#endif
