#include "dcm/profile.hpp"

#include <cmath>

#include "dcm/linprog.hpp"
#include "dcm/neighbors.hpp"
#include "dcm/overlap.hpp"
#include "dcm/rng.hpp"
#include "dcm/topology.hpp"

namespace dcm {

std::size_t measure_index(const std::string& name) {
  for (std::size_t i = 0; i < kMeasureNames.size(); ++i)
    if (name == kMeasureNames[i]) return i;
  throw error("unknown measure '" + name + "'");
}

namespace {

void check_range(const ComplexityProfile& p, std::size_t m, double lo, double hi) {
  const double v = p.values[m];
  if (std::isnan(v) || v < lo - 1e-12 || v > hi + 1e-12)
    throw error("internal: measure " + std::string(kMeasureNames[m]) + " = " +
                std::to_string(v) + " out of range on '" + p.name + "'");
}

}  // namespace

ComplexityProfile compute_profile(const Dataset& ds, std::uint64_t seed) {
  ComplexityProfile p;
  p.name = ds.name();
  p.n = ds.size();
  p.d = ds.dim();
  p.seed = seed;
  p.solver = kSolverId;
  p.rng = kRngId;

  p.values[measure_index("F1")] = f1_max_fisher(ds);
  p.values[measure_index("F2")] = f2_overlap_volume(ds);
  p.values[measure_index("F3")] = f3_max_feature_efficiency(ds);

  const LinearMeasures lm = linear_measures(ds, seed);
  p.values[measure_index("L1")] = lm.l1;
  p.values[measure_index("L2")] = lm.l2;
  p.values[measure_index("L3")] = lm.l3;

  p.values[measure_index("N1")] = n1_boundary_fraction(ds);
  p.values[measure_index("N2")] = n2_intra_inter_ratio(ds);
  p.values[measure_index("N3")] = n3_loo_nn_error(ds);
  p.values[measure_index("N4")] = n4_nn_nonlinearity(ds, seed);
  p.values[measure_index("T1")] = t1_adherence_fraction(ds);
  p.values[measure_index("T2")] = t2_points_per_dimension(ds);

  if (std::isinf(p.values[measure_index("F1")])) p.flags.push_back("f1_infinite");
  if (std::isinf(p.values[measure_index("N2")])) p.flags.push_back("n2_infinite");
  if (lm.degenerate_diagonal) p.flags.push_back("degenerate_diagonal");
  const std::size_t n1c = ds.class_count(0);
  const std::size_t n2c = ds.class_count(1);
  if (n1c == 1 && n2c == 1)
    p.flags.push_back("n2_intra_empty");
  else if (n1c == 1 || n2c == 1)
    p.flags.push_back("n2_intra_singleton_excluded");

  for (const char* m : {"F2", "F3", "L2", "L3", "N1", "N3", "N4", "T1"})
    check_range(p, measure_index(m), 0.0, 1.0);
  if (p.values[measure_index("L1")] < 0.0 || p.values[measure_index("F1")] < 0.0 ||
      p.values[measure_index("N2")] < 0.0 || p.values[measure_index("T2")] <= 0.0)
    throw error("internal: negative measure on '" + p.name + "'");
  return p;
}

}  // namespace dcm
