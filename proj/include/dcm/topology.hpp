#ifndef DCM_TOPOLOGY_HPP
#define DCM_TOPOLOGY_HPP

#include "dcm/dataset.hpp"

namespace dcm {

/// Ball grown from a training point until it reaches the nearest
/// opposite-class point; retained unless it lies entirely inside a larger
/// same-class ball (equal radii resolved toward the lower index).
struct AdherenceBall {
  std::size_t center_index = 0;
  double radius = 0.0;
  bool retained = true;
};

std::vector<AdherenceBall> adherence_balls(const Dataset& ds);

/// T1: fraction of points whose adherence ball survives removal.
double t1_adherence_fraction(const Dataset& ds);

/// T2: points per feature dimension, n / d.
double t2_points_per_dimension(const Dataset& ds);

}  // namespace dcm

#endif
