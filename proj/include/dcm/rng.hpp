#ifndef DCM_RNG_HPP
#define DCM_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

namespace dcm {

inline constexpr const char* kRngId = "splitmix64";

/// SplitMix64: a Weyl counter pushed through the Steele/Lea/Flood finalizer.
/// Streams are reproducible across runs of this implementation; no
/// cross-language bit compatibility is promised.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0,1), 53-bit resolution.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform index in [0, n). n must be nonzero.
  std::uint64_t uniform_index(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  bool coin() { return (next() & 1ull) != 0; }

  /// Standard normal via Box-Muller (two uniforms per pair, second cached).
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// Derives a per-problem seed from a global seed and an entry index.
inline std::uint64_t mix_seed(std::uint64_t global_seed, std::uint64_t id) {
  SplitMix64 g(global_seed ^ (0x9E3779B97F4A7C15ull * (id + 1)));
  return g.next();
}

}  // namespace dcm

#endif
