#include "dcm/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dcm/rng.hpp"

namespace dcm {

namespace {

constexpr const char* kLabel1 = "c1";
constexpr const char* kLabel2 = "c2";

Dataset assemble(std::string name, std::size_t dim, std::vector<double> data,
                 std::vector<std::uint8_t> cls) {
  return Dataset::from_parts(std::move(name), dim, std::move(data), std::move(cls),
                             {kLabel1, kLabel2});
}

}  // namespace

GenKind parse_gen_kind(const std::string& name) {
  if (name == "random-labeling") return GenKind::random_labeling;
  if (name == "linear-margin") return GenKind::linear_margin;
  if (name == "checkerboard") return GenKind::checkerboard;
  if (name == "rings") return GenKind::rings;
  throw error("unknown generator kind '" + name +
              "' (expected random-labeling, linear-margin, checkerboard or rings)");
}

std::string gen_kind_name(GenKind kind) {
  switch (kind) {
    case GenKind::random_labeling: return "random-labeling";
    case GenKind::linear_margin: return "linear-margin";
    case GenKind::checkerboard: return "checkerboard";
    case GenKind::rings: return "rings";
  }
  return "?";
}

Dataset gen_random_labeling(std::size_t dim, std::size_t n_per_class, std::uint64_t seed) {
  if (dim == 0) throw error("dim must be >= 1");
  if (n_per_class == 0) throw error("n_per_class must be >= 1");
  const std::size_t n = 2 * n_per_class;
  SplitMix64 rng(seed);
  std::vector<double> data(n * dim);
  for (double& v : data) v = rng.uniform();
  std::vector<std::uint8_t> cls(n);
  std::size_t count1 = 0;
  for (auto& c : cls) {
    c = rng.coin() ? 1 : 0;
    if (c == 0) ++count1;
  }
  // Swap random excess labels until exactly balanced.
  while (count1 != n_per_class) {
    const std::size_t idx = rng.uniform_index(n);
    if (count1 > n_per_class && cls[idx] == 0) {
      cls[idx] = 1;
      --count1;
    } else if (count1 < n_per_class && cls[idx] == 1) {
      cls[idx] = 0;
      ++count1;
    }
  }
  return assemble("random-labeling:d=" + std::to_string(dim) + ":n=" + std::to_string(n_per_class) +
                      ":seed=" + std::to_string(seed),
                  dim, std::move(data), std::move(cls));
}

Dataset gen_linear_margin(std::size_t dim, std::size_t n_per_class, double margin,
                          std::uint64_t seed) {
  if (dim == 0) throw error("dim must be >= 1");
  if (n_per_class == 0) throw error("n_per_class must be >= 1");
  if (margin < 0.0) throw error("margin must be >= 0");
  SplitMix64 rng(seed);

  std::vector<double> normal(dim);
  double norm = 0.0;
  do {
    norm = 0.0;
    for (auto& u : normal) {
      u = rng.gaussian();
      norm += u * u;
    }
    norm = std::sqrt(norm);
  } while (norm < 1e-9);
  for (auto& u : normal) u /= norm;

  std::vector<double> data;
  data.reserve(2 * n_per_class * dim);
  std::vector<std::uint8_t> cls;
  cls.reserve(2 * n_per_class);
  std::array<std::size_t, 2> filled{0, 0};
  std::vector<double> candidate(dim);
  std::size_t draws = 0;
  std::size_t outside_margin = 0;
  while (filled[0] < n_per_class || filled[1] < n_per_class) {
    ++draws;
    double s = 0.0;
    for (std::size_t f = 0; f < dim; ++f) {
      candidate[f] = rng.uniform();
      s += normal[f] * (candidate[f] - 0.5);
    }
    if (std::fabs(s) < margin / 2.0) {
      if (draws >= 2000 && static_cast<double>(outside_margin) < 0.001 * static_cast<double>(draws))
        throw error("impossible margin: " + std::to_string(draws) + " draws, " +
                    std::to_string(outside_margin) + " outside the margin band");
      continue;
    }
    ++outside_margin;
    const std::uint8_t c = s > 0.0 ? 0 : 1;
    if (filled[c] == n_per_class) continue;  // class full, surplus draw dropped
    data.insert(data.end(), candidate.begin(), candidate.end());
    cls.push_back(c);
    ++filled[c];
  }
  return assemble("linear-margin:d=" + std::to_string(dim) + ":m=" + std::to_string(margin) +
                      ":n=" + std::to_string(n_per_class) + ":seed=" + std::to_string(seed),
                  dim, std::move(data), std::move(cls));
}

Dataset gen_checkerboard(std::size_t cells_per_side, std::size_t n_per_class, std::uint64_t seed) {
  if (cells_per_side < 2) throw error("cells_per_side must be >= 2");
  if (n_per_class == 0) throw error("n_per_class must be >= 1");
  SplitMix64 rng(seed);
  std::vector<double> data;
  data.reserve(4 * n_per_class);
  std::vector<std::uint8_t> cls;
  cls.reserve(2 * n_per_class);
  std::array<std::size_t, 2> filled{0, 0};
  while (filled[0] < n_per_class || filled[1] < n_per_class) {
    const double x = rng.uniform();
    const double y = rng.uniform();
    const auto cx = std::min(static_cast<std::size_t>(x * static_cast<double>(cells_per_side)),
                             cells_per_side - 1);
    const auto cy = std::min(static_cast<std::size_t>(y * static_cast<double>(cells_per_side)),
                             cells_per_side - 1);
    const std::uint8_t c = static_cast<std::uint8_t>((cx + cy) % 2);
    if (filled[c] == n_per_class) continue;
    data.push_back(x);
    data.push_back(y);
    cls.push_back(c);
    ++filled[c];
  }
  return assemble("checkerboard:c=" + std::to_string(cells_per_side) + ":n=" +
                      std::to_string(n_per_class) + ":seed=" + std::to_string(seed),
                  2, std::move(data), std::move(cls));
}

Dataset gen_rings(std::size_t n_per_class, double r_inner, double r_outer, double gap,
                  std::uint64_t seed) {
  if (n_per_class == 0) throw error("n_per_class must be >= 1");
  if (!(r_inner > 0.0)) throw error("r_inner must be > 0");
  if (gap < 0.0) throw error("gap must be >= 0");
  if (!(r_inner + gap < r_outer)) throw error("need r_inner + gap < r_outer");
  const double band = (r_outer - r_inner - gap) / 2.0;
  SplitMix64 rng(seed);
  std::vector<double> data;
  data.reserve(4 * n_per_class);
  std::vector<std::uint8_t> cls;
  cls.reserve(2 * n_per_class);
  for (int c = 0; c < 2; ++c) {
    const double lo = c == 0 ? r_inner : r_outer - band;
    for (std::size_t k = 0; k < n_per_class; ++k) {
      const double theta = 2.0 * std::numbers::pi * rng.uniform();
      const double r = lo + band * rng.uniform();
      data.push_back(r * std::cos(theta));
      data.push_back(r * std::sin(theta));
      cls.push_back(static_cast<std::uint8_t>(c));
    }
  }
  return assemble("rings:rin=" + std::to_string(r_inner) + ":rout=" + std::to_string(r_outer) +
                      ":gap=" + std::to_string(gap) + ":n=" + std::to_string(n_per_class) +
                      ":seed=" + std::to_string(seed),
                  2, std::move(data), std::move(cls));
}

Dataset generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GenKind::random_labeling:
      return gen_random_labeling(spec.dim, spec.n_per_class, spec.seed);
    case GenKind::linear_margin:
      return gen_linear_margin(spec.dim, spec.n_per_class, spec.margin, spec.seed);
    case GenKind::checkerboard:
      return gen_checkerboard(spec.cells, spec.n_per_class, spec.seed);
    case GenKind::rings:
      return gen_rings(spec.n_per_class, spec.r_inner, spec.r_outer, spec.gap, spec.seed);
  }
  throw error("unknown generator kind");
}

}  // namespace dcm
