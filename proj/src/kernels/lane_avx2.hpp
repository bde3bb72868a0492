#pragma once

// Only include from translation units compiled with -mavx2.

#include <immintrin.h>

#include <cstddef>

namespace chaoscert::kernels::detail {

struct Mask4 {
  __m256d m;
};

struct Vec4 {
  __m256d v;
  Vec4() = default;
  Vec4(__m256d x) : v(x) {}
  Vec4(double x) : v(_mm256_set1_pd(x)) {}
};

inline Vec4 operator+(Vec4 a, Vec4 b) { return _mm256_add_pd(a.v, b.v); }
inline Vec4 operator-(Vec4 a, Vec4 b) { return _mm256_sub_pd(a.v, b.v); }
inline Vec4 operator*(Vec4 a, Vec4 b) { return _mm256_mul_pd(a.v, b.v); }
inline Vec4 operator/(Vec4 a, Vec4 b) { return _mm256_div_pd(a.v, b.v); }

inline Mask4 operator<(Vec4 a, Vec4 b) { return {_mm256_cmp_pd(a.v, b.v, _CMP_LT_OQ)}; }
inline Mask4 operator>(Vec4 a, Vec4 b) { return {_mm256_cmp_pd(a.v, b.v, _CMP_GT_OQ)}; }
inline Mask4 operator==(Vec4 a, Vec4 b) { return {_mm256_cmp_pd(a.v, b.v, _CMP_EQ_OQ)}; }

inline Vec4 select(Mask4 m, Vec4 a, Vec4 b) { return _mm256_blendv_pd(b.v, a.v, m.m); }
inline Vec4 floor_lane(Vec4 x) { return _mm256_floor_pd(x.v); }
inline Vec4 abs_lane(Vec4 x) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x.v);
}

inline void frexp_lane(Vec4 x, Vec4& mant, Vec4& e) {
  const __m256i bits = _mm256_castpd_si256(x.v);
  // Biased exponent as double via the 2^52 magic constant; exact for 11-bit fields.
  const __m256i magic = _mm256_set1_epi64x(0x4330000000000000LL);
  const __m256i field = _mm256_or_si256(_mm256_srli_epi64(bits, 52), magic);
  e = _mm256_sub_pd(_mm256_sub_pd(_mm256_castsi256_pd(field), _mm256_castsi256_pd(magic)),
                    _mm256_set1_pd(1022.0));
  const __m256i keep = _mm256_set1_epi64x(static_cast<long long>(0x800fffffffffffffULL));
  const __m256i half = _mm256_set1_epi64x(0x3fe0000000000000LL);
  mant = _mm256_castsi256_pd(_mm256_or_si256(_mm256_and_si256(bits, keep), half));
}

inline Vec4 pow2i(Vec4 n) {
  const __m128i n32 = _mm256_cvtpd_epi32(n.v);
  __m256i n64 = _mm256_cvtepi32_epi64(n32);
  n64 = _mm256_add_epi64(n64, _mm256_set1_epi64x(1023));
  return _mm256_castsi256_pd(_mm256_slli_epi64(n64, 52));
}

struct Avx2Lane {
  using type = Vec4;
  static constexpr std::size_t width = 4;
  static Vec4 load(const double* p) { return _mm256_loadu_pd(p); }
  static void store(double* p, Vec4 v) { _mm256_storeu_pd(p, v.v); }
};

}  // namespace chaoscert::kernels::detail
