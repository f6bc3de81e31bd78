#ifndef DCM_PROFILE_HPP
#define DCM_PROFILE_HPP

#include <array>
#include <cstdint>

#include "dcm/dataset.hpp"

namespace dcm {

inline constexpr std::array<const char*, 12> kMeasureNames = {
    "F1", "F2", "F3", "L1", "L2", "L3", "N1", "N2", "N3", "N4", "T1", "T2"};

/// Index of a measure name in kMeasureNames; throws on unknown names.
std::size_t measure_index(const std::string& name);

/// The 12-measure vector for one problem plus provenance. F1 and N2 may hold
/// the infinity sentinel; flags record which degenerate rules fired.
struct ComplexityProfile {
  std::string name;
  std::size_t n = 0;
  std::size_t d = 0;
  std::uint64_t seed = 0;
  std::string group;
  std::string solver;
  std::string rng;
  std::array<double, 12> values{};
  std::vector<std::string> flags;

  double value(std::size_t measure) const { return values[measure]; }
};

/// Computes all 12 measures; the seed feeds only the L3/N4 test sets.
ComplexityProfile compute_profile(const Dataset& ds, std::uint64_t seed);

}  // namespace dcm

#endif
