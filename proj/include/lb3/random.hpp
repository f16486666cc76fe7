#pragma once

#include <cstdint>
#include <random>

#include "lb3/linalg.hpp"

namespace lb3 {

// Seeded uniform doubles built directly from mt19937_64 output so streams
// are identical across platforms (std::uniform_real_distribution is
// implementation-defined).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [0, 1) with 53 random mantissa bits.
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  /// Uniform on the unit square [0,1) x [0,1): real part first.
  Cplx unit_square() {
    const double re = unit();
    const double im = unit();
    return {re, im};
  }

 private:
  std::mt19937_64 eng_;
};

inline ComplexMatrix random_unit_square_matrix(int rows, int cols, SeededRng& rng) {
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rng.unit_square();
  return m;
}

}  // namespace lb3
