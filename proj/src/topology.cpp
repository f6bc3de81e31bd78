#include "dcm/topology.hpp"

#include "dcm/neighbors.hpp"

namespace dcm {

std::vector<AdherenceBall> adherence_balls(const Dataset& ds) {
  const std::size_t n = ds.size();
  if (n < 2) throw error("adherence balls need at least two points");
  const NeighborTable nt = neighbor_table(ds);
  std::vector<AdherenceBall> balls(n);
  for (std::size_t i = 0; i < n; ++i) balls[i] = {i, nt.inter_distance[i], true};

  // Containment against original radii: dist(i,j) + r_i <= r_j puts ball i
  // inside ball j; the (r, index) tie keeps one of two identical balls.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n && balls[i].retained; ++j) {
      if (j == i || ds.class_index(j) != ds.class_index(i)) continue;
      const double rj = balls[j].radius;
      const double ri = balls[i].radius;
      if (rj < ri || (rj == ri && j > i)) continue;
      if (euclidean_distance(ds.point(i), ds.point(j)) + ri <= rj) balls[i].retained = false;
    }
  }
  return balls;
}

double t1_adherence_fraction(const Dataset& ds) {
  const auto balls = adherence_balls(ds);
  std::size_t retained = 0;
  for (const auto& b : balls) retained += b.retained ? 1 : 0;
  return static_cast<double>(retained) / static_cast<double>(balls.size());
}

double t2_points_per_dimension(const Dataset& ds) {
  return static_cast<double>(ds.size()) / static_cast<double>(ds.dim());
}

}  // namespace dcm
