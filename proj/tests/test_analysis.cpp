#include "doctest.h"

#include <cmath>
#include <limits>

#include "dcm/analysis.hpp"
#include "dcm/linalg.hpp"
#include "dcm/rng.hpp"

using namespace dcm;

namespace {

ProfileTable noise_table(std::size_t rows, std::uint64_t seed) {
  SplitMix64 rng(seed);
  ProfileTable t;
  for (std::size_t i = 0; i < rows; ++i) {
    ComplexityProfile p;
    p.name = "noise" + std::to_string(i);
    for (auto& v : p.values) v = rng.uniform();
    t.rows.push_back(std::move(p));
  }
  return t;
}

}  // namespace

TEST_CASE("correlation fixtures: identical and anti-correlated columns") {
  SplitMix64 rng(5);
  ProfileTable t;
  for (int i = 0; i < 20; ++i) {
    ComplexityProfile p;
    for (auto& v : p.values) v = rng.uniform();
    const std::size_t l2 = measure_index("L2");
    p.values[measure_index("L3")] = p.values[l2];        // identical columns
    p.values[measure_index("N2")] = -p.values[measure_index("N1")];  // anti-correlated
    t.rows.push_back(std::move(p));
  }
  const CorrelationResult corr = correlation_matrix(t);
  CHECK(corr.r[measure_index("L2")][measure_index("L3")] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(corr.r[measure_index("N1")][measure_index("N2")] == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("correlation matrix shape properties") {
  const ProfileTable t = noise_table(40, 8);
  const CorrelationResult corr = correlation_matrix(t);
  for (std::size_t a = 0; a < 12; ++a) {
    CHECK(corr.r[a][a] == 1.0);
    for (std::size_t b = 0; b < 12; ++b) {
      CHECK(corr.r[a][b] == corr.r[b][a]);
      CHECK(std::fabs(corr.r[a][b]) <= 1.0);
    }
  }
  // positive semidefinite up to rounding (listwise-complete table)
  std::vector<double> flat(12 * 12);
  for (std::size_t a = 0; a < 12; ++a)
    for (std::size_t b = 0; b < 12; ++b) flat[a * 12 + b] = corr.r[a][b];
  std::vector<double> eig, vec;
  jacobi_eigen_symmetric(flat, 12, eig, vec);
  for (const double ev : eig) CHECK(ev >= -1e-9);
}

TEST_CASE("correlation exclusions and degenerate columns") {
  ProfileTable t = noise_table(10, 3);
  t.rows[0].values[measure_index("F1")] = std::numeric_limits<double>::infinity();
  t.rows[3].values[measure_index("N2")] = std::numeric_limits<double>::infinity();
  for (auto& row : t.rows) row.values[measure_index("T2")] = 5.0;  // constant column
  const CorrelationResult corr = correlation_matrix(t);
  CHECK(corr.excluded[measure_index("F1")][measure_index("N2")] == 2);
  CHECK(corr.excluded[measure_index("F1")][measure_index("F2")] == 1);
  CHECK(std::isnan(corr.r[measure_index("T2")][measure_index("F2")]));
  CHECK(std::isnan(corr.r[measure_index("T2")][measure_index("T2")]));
  CHECK(corr.r[measure_index("F1")][measure_index("N2")] ==
        doctest::Approx(corr.r[measure_index("N2")][measure_index("F1")]));

  ProfileTable tiny = noise_table(2, 1);
  CHECK_THROWS_AS(correlation_matrix(tiny), error);
}

TEST_CASE("pca: two perfectly correlated columns dominate") {
  SplitMix64 rng(9);
  ProfileTable t;
  for (int i = 0; i < 60; ++i) {
    ComplexityProfile p;
    for (auto& v : p.values) v = rng.uniform();
    p.values[1] = 3.0 * p.values[0];  // F2 = 3 F1 after standardization -> same direction
    t.rows.push_back(std::move(p));
  }
  const PCAResult res = pca(t);
  CHECK(res.columns.size() == 12);
  CHECK(res.fractions[0] >= res.fractions[1]);
  double sum = 0.0;
  for (const double f : res.fractions) {
    CHECK(f >= 0.0);
    sum += f;
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
  // the shared direction loads the two tied columns equally
  CHECK(std::fabs(res.loadings[0][0]) == doctest::Approx(std::fabs(res.loadings[0][1])).epsilon(1e-6));
}

TEST_CASE("pca orthonormality and reconstruction") {
  const ProfileTable t = noise_table(80, 17);
  const PCAResult res = pca(t);
  const std::size_t k = res.columns.size();
  REQUIRE(k == 12);

  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      double dot = 0.0;
      for (std::size_t j = 0; j < k; ++j) dot += res.loadings[a][j] * res.loadings[b][j];
      CHECK(dot == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-9));
    }

  // project standardized rows onto all components and back
  for (const auto& row : t.rows) {
    std::vector<double> std_row(k);
    for (std::size_t j = 0; j < k; ++j)
      std_row[j] = (row.values[j] - res.means[j]) / res.sds[j];
    std::vector<double> recon(k, 0.0);
    for (std::size_t c = 0; c < k; ++c) {
      double score = 0.0;
      for (std::size_t j = 0; j < k; ++j) score += res.loadings[c][j] * std_row[j];
      for (std::size_t j = 0; j < k; ++j) recon[j] += score * res.loadings[c][j];
    }
    for (std::size_t j = 0; j < k; ++j) CHECK(std::fabs(recon[j] - std_row[j]) < 1e-8);
  }
}

TEST_CASE("pca on iid noise: no dominant component at fixed seed") {
  const PCAResult res = pca(noise_table(500, 23));
  CHECK(res.fractions[0] < 2.0 / 12.0);
}

TEST_CASE("pca row/column exclusions") {
  ProfileTable t = noise_table(30, 2);
  t.rows[4].values[0] = std::numeric_limits<double>::infinity();
  for (auto& row : t.rows) row.values[11] = 42.0;
  const PCAResult res = pca(t);
  CHECK(res.excluded_rows == 1);
  CHECK(res.excluded_columns == std::vector<std::string>{"T2"});
  CHECK(res.columns.size() == 11);
  double sum = 0.0;
  for (const double f : res.fractions) sum += f;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("pca explained fractions are permutation invariant") {
  ProfileTable t = noise_table(25, 44);
  ProfileTable shuffled_rows = t;
  std::swap(shuffled_rows.rows[0], shuffled_rows.rows[20]);
  std::swap(shuffled_rows.rows[3], shuffled_rows.rows[11]);
  const PCAResult a = pca(t);
  const PCAResult b = pca(shuffled_rows);
  for (std::size_t i = 0; i < a.fractions.size(); ++i)
    CHECK(a.fractions[i] == doctest::Approx(b.fractions[i]).epsilon(1e-10));
}
