#ifndef DCM_NEIGHBORS_HPP
#define DCM_NEIGHBORS_HPP

#include <cstdint>
#include <limits>

#include "dcm/dataset.hpp"

namespace dcm {

struct Edge {
  std::size_t i = 0;  // i < j
  std::size_t j = 0;
  double weight = 0.0;
};

struct EdgeList {
  std::size_t node_count = 0;
  std::vector<Edge> edges;

  double total_weight() const {
    double s = 0.0;
    for (const Edge& e : edges) s += e.weight;
    return s;
  }
};

/// Per point: nearest neighbor within its class (self excluded; absent for a
/// singleton class) and nearest neighbor in the other class. Ties go to the
/// lowest index.
struct NeighborTable {
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> intra_index;  // npos when the class is a singleton
  std::vector<double> intra_distance;    // infinity when absent
  std::vector<std::size_t> inter_index;
  std::vector<double> inter_distance;
};

NeighborTable neighbor_table(const Dataset& ds);

/// Prim's algorithm over the complete Euclidean graph, O(n^2) and
/// deterministic: equal-weight candidate edges are resolved toward the
/// lexicographically smallest (i, j). Edges come back sorted by (i, j).
EdgeList minimum_spanning_tree(const PointsView& pts);

/// N1: fraction of points incident to at least one class-crossing MST edge.
double n1_boundary_fraction(const Dataset& ds);

/// N2: mean intra-class NN distance over mean inter-class NN distance.
/// Singleton-class points are left out of the intra average; a zero inter
/// average (every point has a coincident enemy) returns infinity.
double n2_intra_inter_ratio(const Dataset& ds);

/// N3: leave-one-out 1NN error rate.
double n3_loo_nn_error(const Dataset& ds);

/// N4: 1NN error rate on interpolated_test_set(ds, n, seed).
double n4_nn_nonlinearity(const Dataset& ds, std::uint64_t seed);

}  // namespace dcm

#endif
