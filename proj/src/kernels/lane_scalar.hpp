#pragma once

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>

namespace chaoscert::kernels::detail {

// One-lane "vector": plain double with bool masks.
inline double select(bool m, double a, double b) { return m ? a : b; }
inline double floor_lane(double x) { return std::floor(x); }
inline double abs_lane(double x) { return std::fabs(x); }

// x = mant * 2^e with mant in [0.5, 1); x must be positive and normal.
inline void frexp_lane(double x, double& mant, double& e) {
  const auto bits = std::bit_cast<std::uint64_t>(x);
  e = static_cast<double>(static_cast<std::int64_t>(bits >> 52)) - 1022.0;
  mant = std::bit_cast<double>((bits & 0x800fffffffffffffULL) | 0x3fe0000000000000ULL);
}

// 2^n for integral n in [-1022, 1023].
inline double pow2i(double n) {
  const auto biased = static_cast<std::int64_t>(n) + 1023;
  return std::bit_cast<double>(static_cast<std::uint64_t>(biased) << 52);
}

struct ScalarLane {
  using type = double;
  static constexpr std::size_t width = 1;
  static double load(const double* p) { return *p; }
  static void store(double* p, double v) { *p = v; }
};

}  // namespace chaoscert::kernels::detail
