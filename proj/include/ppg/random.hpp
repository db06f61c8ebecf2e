#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "ppg/types.hpp"

namespace ppg {

/// Seedable 64-bit generator used for all instance generation.
///
/// Uniform doubles come from the top 53 bits of mt19937_64 output and
/// Gaussians from an explicit Box-Muller transform, so sequences are
/// reproducible across platforms and standard libraries for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Standard Gaussian (Box-Muller, one spare cached per pair).
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    // u1 in (0, 1] keeps the log finite.
    double u1 = 1.0 - uniform();
    double u2 = uniform();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  Vec gaussian_vector(Index n) {
    Vec v(n);
    for (Index i = 0; i < n; ++i) v[i] = gaussian();
    return v;
  }

  /// Entries drawn in column-major order.
  Mat gaussian_matrix(Index rows, Index cols) {
    Mat m(rows, cols);
    for (Index c = 0; c < cols; ++c)
      for (Index r = 0; r < rows; ++r) m(r, c) = gaussian();
    return m;
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace ppg
