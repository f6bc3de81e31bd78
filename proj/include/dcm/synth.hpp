#ifndef DCM_SYNTH_HPP
#define DCM_SYNTH_HPP

#include <cstdint>

#include "dcm/dataset.hpp"

namespace dcm {

enum class GenKind { random_labeling, linear_margin, checkerboard, rings };

GenKind parse_gen_kind(const std::string& name);
std::string gen_kind_name(GenKind kind);

struct GeneratorSpec {
  GenKind kind = GenKind::random_labeling;
  std::size_t dim = 2;
  std::size_t n_per_class = 100;
  std::uint64_t seed = 0;
  double margin = 0.1;          // linear_margin
  std::size_t cells = 4;        // checkerboard (dim fixed at 2)
  double r_inner = 0.2;         // rings
  double r_outer = 0.5;
  double gap = 0.05;
};

/// Uniform points in [0,1]^d, fair-coin labels rebalanced to exactly
/// n_per_class each.
Dataset gen_random_labeling(std::size_t dim, std::size_t n_per_class, std::uint64_t seed);

/// Uniform points in [0,1]^d split by a random hyperplane through the box
/// center; draws within margin/2 of the plane are resampled, classes filled
/// to equal size. Throws when the margin rejects more than 99.9% of draws.
Dataset gen_linear_margin(std::size_t dim, std::size_t n_per_class, double margin,
                          std::uint64_t seed);

/// Uniform points in [0,1]^2 labeled by the parity of their grid cell.
Dataset gen_checkerboard(std::size_t cells_per_side, std::size_t n_per_class, std::uint64_t seed);

/// Two concentric annuli around the origin: class 1 on [r_inner, r_inner+w],
/// class 2 on [r_outer-w, r_outer] with w = (r_outer - r_inner - gap) / 2;
/// angle uniform, radius uniform within the band.
Dataset gen_rings(std::size_t n_per_class, double r_inner, double r_outer, double gap,
                  std::uint64_t seed);

/// Dispatch on spec.kind; every generator is a pure function of its spec.
Dataset generate(const GeneratorSpec& spec);

}  // namespace dcm

#endif
