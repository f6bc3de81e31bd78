#include "dcm/neighbors.hpp"

#include <algorithm>
#include <cmath>

#include "dcm/linprog.hpp"

namespace dcm {

NeighborTable neighbor_table(const Dataset& ds) {
  const std::size_t n = ds.size();
  NeighborTable nt;
  nt.intra_index.assign(n, NeighborTable::npos);
  nt.intra_distance.assign(n, std::numeric_limits<double>::infinity());
  nt.inter_index.assign(n, NeighborTable::npos);
  nt.inter_distance.assign(n, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double d = euclidean_distance(ds.point(i), ds.point(j));
      if (ds.class_index(i) == ds.class_index(j)) {
        if (d < nt.intra_distance[i]) {
          nt.intra_distance[i] = d;
          nt.intra_index[i] = j;
        }
      } else if (d < nt.inter_distance[i]) {
        nt.inter_distance[i] = d;
        nt.inter_index[i] = j;
      }
    }
  }
  return nt;
}

EdgeList minimum_spanning_tree(const PointsView& pts) {
  const std::size_t n = pts.n;
  if (n < 2) throw error("MST needs at least two points");
  EdgeList out;
  out.node_count = n;
  out.edges.reserve(n - 1);

  std::vector<char> in_tree(n, 0);
  std::vector<double> best(n);
  std::vector<std::size_t> parent(n, 0);
  in_tree[0] = 1;
  for (std::size_t j = 1; j < n; ++j) best[j] = euclidean_distance(pts.point(0), pts.point(j));

  for (std::size_t step = 1; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t j = 1; j < n; ++j) {
      if (in_tree[j]) continue;
      if (pick == n || best[j] < best[pick]) pick = j;
    }
    out.edges.push_back({std::min(parent[pick], pick), std::max(parent[pick], pick), best[pick]});
    in_tree[pick] = 1;
    for (std::size_t k = 1; k < n; ++k) {
      if (in_tree[k]) continue;
      const double d = euclidean_distance(pts.point(pick), pts.point(k));
      if (d < best[k] || (d == best[k] && pick < parent[k])) {
        best[k] = d;
        parent[k] = pick;
      }
    }
  }
  std::sort(out.edges.begin(), out.edges.end(), [](const Edge& a, const Edge& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  return out;
}

double n1_boundary_fraction(const Dataset& ds) {
  if (ds.size() < 2) throw error("N1 needs at least two points");
  const EdgeList mst = minimum_spanning_tree(ds.points());
  std::vector<char> boundary(ds.size(), 0);
  for (const Edge& e : mst.edges) {
    if (ds.class_index(e.i) != ds.class_index(e.j)) {
      boundary[e.i] = 1;
      boundary[e.j] = 1;
    }
  }
  const auto count = std::count(boundary.begin(), boundary.end(), char{1});
  return static_cast<double>(count) / static_cast<double>(ds.size());
}

double n2_intra_inter_ratio(const Dataset& ds) {
  const NeighborTable nt = neighbor_table(ds);
  double intra_sum = 0.0;
  std::size_t intra_count = 0;
  double inter_sum = 0.0;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (nt.intra_index[i] != NeighborTable::npos) {
      intra_sum += nt.intra_distance[i];
      ++intra_count;
    }
    inter_sum += nt.inter_distance[i];
  }
  const double intra_mean = intra_count ? intra_sum / static_cast<double>(intra_count) : 0.0;
  const double inter_mean = inter_sum / static_cast<double>(ds.size());
  if (inter_mean == 0.0) return std::numeric_limits<double>::infinity();
  return intra_mean / inter_mean;
}

double n3_loo_nn_error(const Dataset& ds) {
  const std::size_t n = ds.size();
  if (n < 2) throw error("N3 needs at least two points");
  std::size_t errors = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t nearest = NeighborTable::npos;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double d = euclidean_distance(ds.point(i), ds.point(j));
      if (d < best) {
        best = d;
        nearest = j;
      }
    }
    if (ds.class_index(nearest) != ds.class_index(i)) ++errors;
  }
  return static_cast<double>(errors) / static_cast<double>(n);
}

double n4_nn_nonlinearity(const Dataset& ds, std::uint64_t seed) {
  const Dataset test = interpolated_test_set(ds, ds.size(), seed);
  std::size_t errors = 0;
  for (std::size_t k = 0; k < test.size(); ++k) {
    std::size_t nearest = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < ds.size(); ++j) {
      const double d = euclidean_distance(test.point(k), ds.point(j));
      if (d < best) {
        best = d;
        nearest = j;
      }
    }
    if (ds.class_index(nearest) != test.class_index(k)) ++errors;
  }
  return static_cast<double>(errors) / static_cast<double>(test.size());
}

}  // namespace dcm
