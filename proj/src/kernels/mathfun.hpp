#pragma once

// Lane-generic exp/log/pow and map kernels. V is either double (lane_scalar.hpp)
// or Vec4 (lane_avx2.hpp); the operation sequence is identical for both.
//
// exp and log are the Cephes double-precision rational approximations.

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>

namespace chaoscert::kernels::detail {

inline constexpr double kLog2e = 1.4426950408889634073599;
inline constexpr double kExpC1 = 6.93145751953125e-1;
inline constexpr double kExpC2 = 1.42860682030941723212e-6;
inline constexpr double kMaxLog = 7.09782712893383996843e2;
inline constexpr double kMinLog = -7.08396418532264106224e2;
inline constexpr double kSqrtHalf = 0.70710678118654752440;
inline constexpr double kLn2Hi = 0.693359375;
inline constexpr double kLn2Lo = -2.121944400546905827679e-4;

template <class V>
V exp_generic(V x) {
  const auto underflow = x < V(kMinLog);
  const auto overflow = x > V(kMaxLog);
  const auto finite = x == x;
  x = select(underflow, V(0.0), x);
  x = select(overflow, V(0.0), x);
  x = select(finite, x, V(0.0));

  const V n = floor_lane(V(kLog2e) * x + V(0.5));
  x = x - n * V(kExpC1);
  x = x - n * V(kExpC2);
  const V xx = x * x;
  const V px = x * ((V(1.26177193074810590878e-4) * xx + V(3.02994407707441961300e-2)) * xx +
                    V(9.99999999999999999910e-1));
  const V qx = ((V(3.00198505138664455042e-6) * xx + V(2.52448340349684104192e-3)) * xx +
                V(2.27265548208155028766e-1)) * xx +
               V(2.00000000000000000009e0);
  V r = px / (qx - px);
  r = V(1.0) + V(2.0) * r;
  r = r * pow2i(n);

  r = select(underflow, V(0.0), r);
  r = select(overflow, V(std::numeric_limits<double>::infinity()), r);
  return select(finite, r, V(std::numeric_limits<double>::quiet_NaN()));
}

// x must be positive and normal. Cephes R/S form on every exponent:
// log(x) = e ln2 + s + s^3 R(s^2)/S(s^2) with s = 2(x-1)/(x+1), x in [sqrt(1/2), sqrt(2)).
template <class V>
V log_generic(V x) {
  V mant, e;
  frexp_lane(x, mant, e);
  const auto low = mant < V(kSqrtHalf);
  e = select(low, e - V(1.0), e);
  const V num = select(low, mant - V(0.5), mant - V(1.0));
  const V den = select(low, V(0.5) * num + V(0.5), V(0.5) * mant + V(0.5));
  const V s = num / den;
  const V z = s * s;
  const V r = (V(-7.89580278884799154124e-1) * z + V(1.63866645699558079767e1)) * z +
              V(-6.41409952958715622951e1);
  const V q = ((z + V(-3.56722798256324312549e1)) * z + V(3.12093766372244180303e2)) * z +
              V(-7.69691943550460008604e2);
  V y = s * (z * r / q);
  y = y + e * V(kLn2Lo);
  y = y + s;
  return y + e * V(kLn2Hi);
}

struct PowSpec {
  double beta;
  bool zero;      // beta == 0
  bool integral;  // beta is an integer
  bool odd;       // integral and odd
  unsigned small; // beta when integral and <= kMaxBinaryPower, else 0

  static constexpr unsigned kMaxBinaryPower = 1024;

  static PowSpec make(double beta) {
    const bool integral = std::isfinite(beta) && std::floor(beta) == beta;
    const bool odd = integral && std::fmod(beta, 2.0) != 0.0;
    const unsigned small =
        integral && beta > 0.0 && beta <= kMaxBinaryPower ? static_cast<unsigned>(beta) : 0u;
    return {beta, beta == 0.0, integral, odd, small};
  }
};

// Small integral exponents use binary powering (exact for beta = 1, one rounding
// for beta = 2); everything else goes through exp(beta * log|base|).
template <class V>
V pow_generic(V base, const PowSpec& s) {
  if (s.zero) return V(1.0);
  if (s.small != 0) {
    V r(1.0);
    V b = base;
    for (unsigned e = s.small;;) {
      if (e & 1u) r = r * b;
      e >>= 1;
      if (e == 0) break;
      b = b * b;
    }
    return r;
  }
  const V a = abs_lane(base);
  const auto is_zero = a == V(0.0);
  V r = exp_generic(V(s.beta) * log_generic(select(is_zero, V(1.0), a)));
  r = select(is_zero, V(0.0), r);
  const auto negative = base < V(0.0);
  if (s.integral) {
    if (s.odd) r = select(negative, V(0.0) - r, r);
  } else {
    r = select(negative, V(std::numeric_limits<double>::quiet_NaN()), r);
  }
  return select(a == a, r, a);
}

template <class V>
V map_generic(V alpha, V k, const PowSpec& s) {
  return (alpha * k) * pow_generic(V(1.0) - k, s);
}

// Loop drivers. Full lanes go through L, the tail through the scalar lane;
// both produce the same bits.

template <class L>
void map_values_impl(double alpha, double beta, std::span<const double> k, std::span<double> out) {
  using V = typename L::type;
  const auto s = PowSpec::make(beta);
  std::size_t i = 0;
  for (; i + L::width <= k.size(); i += L::width)
    L::store(&out[i], map_generic(V(alpha), L::load(&k[i]), s));
  for (; i < k.size(); ++i) out[i] = map_generic(alpha, k[i], s);
}

template <class L>
void iterate_residual_impl(double alpha, double beta, int n, std::span<const double> k,
                           std::span<double> out) {
  using V = typename L::type;
  const auto s = PowSpec::make(beta);
  std::size_t i = 0;
  for (; i + L::width <= k.size(); i += L::width) {
    const V x0 = L::load(&k[i]);
    V x = x0;
    for (int j = 0; j < n; ++j) x = map_generic(V(alpha), x, s);
    L::store(&out[i], x - x0);
  }
  for (; i < k.size(); ++i) {
    double x = k[i];
    for (int j = 0; j < n; ++j) x = map_generic(alpha, x, s);
    out[i] = x - k[i];
  }
}

template <class L>
void peak_iterates_impl(double beta, std::span<const double> alpha, std::span<double> f2m,
                        std::span<double> f3m) {
  using V = typename L::type;
  const auto s = PowSpec::make(beta);
  const double m = 1.0 / (1.0 + beta);
  std::size_t i = 0;
  for (; i + L::width <= alpha.size(); i += L::width) {
    const V a = L::load(&alpha[i]);
    const V x1 = map_generic(a, V(m), s);
    const V x2 = map_generic(a, x1, s);
    L::store(&f2m[i], x2);
    L::store(&f3m[i], map_generic(a, x2, s));
  }
  for (; i < alpha.size(); ++i) {
    const double x2 = map_generic(alpha[i], map_generic(alpha[i], m, s), s);
    f2m[i] = x2;
    f3m[i] = map_generic(alpha[i], x2, s);
  }
}

template <class V>
V peak_return_generic(V alpha, double beta, double q, const PowSpec& s) {
  const V base = (V(beta + 1.0) - alpha * V(q)) / V(beta + 1.0);
  return V(1.0) - (alpha * alpha) * V(q) * pow_generic(base, s);
}

template <class L>
void peak_return_lhs_impl(double beta, std::span<const double> alpha, std::span<double> out) {
  const auto s = PowSpec::make(beta);
  const double q = pow_generic(beta / (beta + 1.0), s);
  std::size_t i = 0;
  for (; i + L::width <= alpha.size(); i += L::width)
    L::store(&out[i], peak_return_generic(L::load(&alpha[i]), beta, q, s));
  for (; i < alpha.size(); ++i) out[i] = peak_return_generic(alpha[i], beta, q, s);
}

template <class V>
V sign_of_gap(V m, V y) {
  return select(y < m, V(1.0), select(y > m, V(-1.0), V(0.0)));
}

template <class L>
void lap_sign_step_impl(double alpha, double beta, std::span<double> orbit,
                        std::span<double> sign) {
  using V = typename L::type;
  const auto s = PowSpec::make(beta);
  const double m = 1.0 / (1.0 + beta);
  std::size_t i = 0;
  for (; i + L::width <= orbit.size(); i += L::width) {
    const V y = L::load(&orbit[i]);
    L::store(&sign[i], L::load(&sign[i]) * sign_of_gap(V(m), y));
    L::store(&orbit[i], map_generic(V(alpha), y, s));
  }
  for (; i < orbit.size(); ++i) {
    sign[i] *= sign_of_gap(m, orbit[i]);
    orbit[i] = map_generic(alpha, orbit[i], s);
  }
}

}  // namespace chaoscert::kernels::detail
