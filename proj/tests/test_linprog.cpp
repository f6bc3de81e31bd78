#include "doctest.h"

#include <cmath>

#include "dcm/linprog.hpp"
#include "dcm/synth.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace dcm;
using namespace dcm::testing;

TEST_CASE("build_smith_system sign and augmentation rule") {
  const Dataset ds = make_1d({0}, {1});
  const LPInstance lp = build_smith_system(ds);
  CHECK(lp.n == 2);
  CHECK(lp.dim_aug == 2);
  CHECK(lp.row(0)[0] == 0.0);   // +(0,1) for class A
  CHECK(lp.row(0)[1] == 1.0);
  CHECK(lp.row(1)[0] == -1.0);  // -(1,1) for class B
  CHECK(lp.row(1)[1] == -1.0);

  const Dataset big = gen_random_labeling(3, 10, 1);
  const LPInstance lp2 = build_smith_system(big);
  CHECK(lp2.n == big.size());
  CHECK(lp2.dim_aug == big.dim() + 1);

  // label swap negates Z
  const LPInstance lp3 = build_smith_system(label_swap(big));
  for (std::size_t i = 0; i < lp2.z.size(); ++i) CHECK(lp3.z[i] == -lp2.z[i]);
}

TEST_CASE("solve_lp separable and coincident fixtures") {
  const LPSolution sep = solve_lp(build_smith_system(make_1d({0}, {1})));
  REQUIRE(sep.status == LpStatus::optimal);
  CHECK(sep.objective == doctest::Approx(0.0).epsilon(1e-12));

  const LPSolution co = solve_lp(build_smith_system(make_1d({0.5}, {0.5})));
  REQUIRE(co.status == LpStatus::optimal);
  CHECK(co.objective == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("solve_lp matches BFS enumeration on small grid instances") {
  // exhaustive 1-D family: 4 points with coordinates from {0,1,2}
  std::size_t instances = 0;
  for (int c0 = 0; c0 < 3; ++c0)
    for (int c1 = 0; c1 < 3; ++c1)
      for (int c2 = 0; c2 < 3; ++c2)
        for (int c3 = 0; c3 < 3; ++c3) {
          const Dataset ds = make_dataset(
              {{double(c0)}, {double(c1)}, {double(c2)}, {double(c3)}}, {"A", "B", "A", "B"});
          const LPInstance lp = build_smith_system(ds);
          const LPSolution sol = solve_lp(lp);
          REQUIRE(sol.status == LpStatus::optimal);
          const BfsOptimum oracle = lp_enumerate_bfs(to_standard_form(lp));
          CHECK(sol.objective == doctest::Approx(oracle.objective)
                                     .epsilon(1e-9)
                                     .scale(1 + std::fabs(oracle.objective)));
          ++instances;
        }
  CHECK(instances == 81);
}

TEST_CASE("LPSolution feasibility residuals hold") {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 5; ++trial) {
    const Dataset ds = gen_random_labeling(2, 15, rng.next());
    const LPInstance lp = build_smith_system(ds);
    const LPSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::optimal);
    for (std::size_t i = 0; i < lp.n; ++i) {
      CHECK(sol.t[i] >= -1e-9);
      double lhs = sol.t[i];
      for (std::size_t k = 0; k < lp.dim_aug; ++k) lhs += lp.row(i)[k] * sol.w[k];
      CHECK(lhs >= 1.0 - 1e-9);
    }
  }
}

TEST_CASE("classify_linear sign and tie rules") {
  const std::vector<double> w{1.0, -0.5};
  const std::vector<double> x1{1.0};
  CHECK(classify_linear(w, x1) == 0);  // score 0.5 -> class 1
  const std::vector<double> x2{0.5};
  CHECK(classify_linear(w, x2) == 1);  // exact tie -> class 2
  const std::vector<double> wn{-1.0, 0.5};
  CHECK(classify_linear(wn, x1) == 1);  // negation flips non-ties
  const std::vector<double> bad{1.0};
  CHECK_THROWS_AS(classify_linear(bad, x1), error);
}

TEST_CASE("L1 fixtures") {
  CHECK(l1_error_distance(make_1d({0}, {1})) == doctest::Approx(0.0).epsilon(1e-12));
  // coincident points: objective 2, n = 2, degenerate diagonal divisor 1
  CHECK(l1_error_distance(make_1d({0.5}, {0.5})) == doctest::Approx(1.0).epsilon(1e-12));

  // interleaved: strictly positive and equal to the enumeration oracle on the
  // diagonal-normalized instance
  const Dataset inter = make_1d({0, 2}, {1, 3});
  const double l1 = l1_error_distance(inter);
  CHECK(l1 > 1e-6);
  const double diag = bounding_diagonal(inter);
  const Dataset scaled = per_feature_affine(inter, {1.0 / diag}, {0.0});
  const BfsOptimum oracle = lp_enumerate_bfs(to_standard_form(build_smith_system(scaled)));
  CHECK(l1 == doctest::Approx(oracle.objective / 4.0).epsilon(1e-9));
}

TEST_CASE("L2 fixtures") {
  CHECK(l2_linear_error(make_1d({0}, {1})) == 0.0);
  CHECK(l2_linear_error(make_1d({0.5}, {0.5})) == 0.5);

  // A={0,2}, B={1,3}: every optimal vertex of the LP misclassifies 2 of 4
  const Dataset inter = make_1d({0, 2}, {1, 3});
  const double diag = bounding_diagonal(inter);
  const Dataset scaled = per_feature_affine(inter, {1.0 / diag}, {0.0});
  const LPInstance lp = build_smith_system(scaled);
  const BfsOptimum oracle = lp_enumerate_bfs(to_standard_form(lp));
  for (const auto& x : oracle.optimal_vertices) {
    std::vector<double> w(lp.dim_aug);
    for (std::size_t k = 0; k < lp.dim_aug; ++k) w[k] = x[k] - x[lp.dim_aug + k];
    std::size_t errors = 0;
    for (std::size_t i = 0; i < scaled.size(); ++i)
      if (classify_linear(w, scaled.point(i)) != scaled.class_index(i)) ++errors;
    CHECK(errors == 2);
  }
  CHECK(l2_linear_error(inter) == 0.5);
}

TEST_CASE("interpolated_test_set contracts") {
  const Dataset ds = make_dataset({{0, 0}, {1, 1}, {5, 5}}, {"A", "A", "B"});
  const Dataset t1 = interpolated_test_set(ds, 40, 9);
  const Dataset t2 = interpolated_test_set(ds, 40, 9);
  CHECK(t1.raw() == t2.raw());  // determinism, bitwise
  CHECK(t1.size() == 40);

  for (std::size_t k = 0; k < t1.size(); ++k) {
    const auto p = t1.point(k);
    if (t1.class_index(k) == 1) {
      // singleton class: interpolants equal the single point
      CHECK(p[0] == 5.0);
      CHECK(p[1] == 5.0);
    } else {
      // class A hull is the segment (0,0)-(1,1)
      CHECK(p[0] >= 0.0);
      CHECK(p[0] <= 1.0);
      CHECK(p[0] == doctest::Approx(p[1]).epsilon(1e-12));
    }
  }
}

TEST_CASE("interpolated_test_set invariant under relabeling and reordering") {
  const Dataset ds = gen_random_labeling(2, 8, 77);
  const Dataset base = interpolated_test_set(ds, 25, 3);
  const Dataset viaswap = interpolated_test_set(label_swap(ds), 25, 3);
  const Dataset viashuffle = interpolated_test_set(shuffled(ds, 5), 25, 3);
  CHECK(base.raw() == viaswap.raw());
  CHECK(base.raw() == viashuffle.raw());
  for (std::size_t k = 0; k < base.size(); ++k) {
    CHECK(base.label(k) == viashuffle.label(k));
    // swapped input: same geometric class, opposite label string
    CHECK(base.label(k) != viaswap.label(k));
  }
}

TEST_CASE("L3 fixtures") {
  // disjoint convex hulls, separable -> 0
  const Dataset sep = make_dataset({{0, 0}, {0, 1}, {5, 0}, {5, 1}}, {"A", "A", "B", "B"});
  CHECK(l3_linear_nonlinearity(sep, 4) == 0.0);

  // coincident singletons: all interpolants at 0.5; tie rule errs exactly on
  // the class-A draws
  const Dataset co = make_1d({0.5}, {0.5});
  const Dataset test = interpolated_test_set(co, 2, 11);
  std::size_t a_draws = 0;
  for (std::size_t k = 0; k < test.size(); ++k)
    if (test.class_index(k) == 0) ++a_draws;
  CHECK(l3_linear_nonlinearity(co, 11) ==
        doctest::Approx(static_cast<double>(a_draws) / 2.0).epsilon(1e-12));
}

TEST_CASE("L1 iff linear separability, L2 = 0 when L1 = 0") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    const Dataset ds = trial % 2 == 0 ? gen_linear_margin(2, 12, 0.05, rng.next())
                                      : gen_random_labeling(2, 12, rng.next());
    const LinearMeasures lm = linear_measures(ds, 1);
    if (trial % 2 == 0) {
      CHECK(lm.l1 <= 1e-9);
      CHECK(lm.l2 == 0.0);
    } else {
      CHECK(lm.l1 >= 0.0);
      if (lm.l1 <= 1e-9) CHECK(lm.l2 == 0.0);
    }
  }
}

TEST_CASE("L1/L2/L3 invariant under uniform coordinate scaling") {
  SplitMix64 rng(71);
  for (int trial = 0; trial < 4; ++trial) {
    const Dataset ds = gen_random_labeling(2, 15, rng.next());
    const double s = 0.2 + 10.0 * rng.uniform();
    const Dataset scaled = per_feature_affine(ds, {s, s}, {0.0, 0.0});
    const LinearMeasures a = linear_measures(ds, 3);
    const LinearMeasures b = linear_measures(scaled, 3);
    CHECK(a.l1 == doctest::Approx(b.l1).epsilon(1e-9));
    CHECK(a.l2 == doctest::Approx(b.l2).epsilon(1e-9));
    CHECK(a.l3 == doctest::Approx(b.l3).epsilon(1e-9));
  }
}

TEST_CASE("LP objective is label-swap invariant bit for bit") {
  SplitMix64 rng(55);
  for (int trial = 0; trial < 6; ++trial) {
    const Dataset ds = gen_random_labeling(2, 10, rng.next());
    const LPSolution a = solve_lp(build_smith_system(ds));
    const LPSolution b = solve_lp(build_smith_system(label_swap(ds)));
    REQUIRE(a.status == LpStatus::optimal);
    REQUIRE(b.status == LpStatus::optimal);
    CHECK(a.objective == b.objective);  // bitwise
    for (std::size_t k = 0; k < a.w.size(); ++k) CHECK(a.w[k] == -b.w[k]);
  }
}
