#ifndef SPINCM_RNG_HPP
#define SPINCM_RNG_HPP

#include <cstdint>
#include <random>

#include "spincm/types.hpp"

namespace spincm {

/// Seeded generator with platform-independent uniform draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1), 53-bit resolution.
  double unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  Complex complex_in_annulus(double rlo, double rhi) {
    const double r = uniform(rlo_clamp(rlo), rhi);
    const double phi = uniform(0.0, 6.283185307179586476925286766559);
    return Complex(r * std::cos(phi), r * std::sin(phi));
  }

 private:
  static double rlo_clamp(double r) { return r < 0.0 ? 0.0 : r; }
  std::mt19937_64 engine_;
};

}  // namespace spincm

#endif
