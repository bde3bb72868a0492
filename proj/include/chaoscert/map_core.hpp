#pragma once

namespace chaoscert {

/// Peak of the map, m = 1/(1+beta).
struct CriticalPoint {
  double m;
};

/// Interior fixed point, z = 1 - alpha^(-1/beta).
struct FixedPoint {
  double z;
};

/// The pollution-effect growth map f(k) = alpha * k * (1 - k)^beta on [0, 1].
///
/// Powers go through kernels::pollution_pow, so scalar evaluation here and the
/// batch kernels agree bit for bit.
class PollutionMap {
 public:
  /// Throws Error(InvalidArgument) unless alpha > 0 and beta >= 0, both finite.
  PollutionMap(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

  /// f(k) for k in [0, 1]. Values above 1 by at most kEscapeSlack are clamped to 1;
  /// anything larger throws Error(DomainEscape).
  double eval(double k) const;

  /// f(k) with no range checks; k may lie outside [0, 1].
  double raw(double k) const noexcept;

  /// f'(k) = alpha (1-k)^(beta-1) (1 - k - beta k). Throws Error(SingularPoint) at
  /// k = 1 when beta < 1.
  double derivative(double k) const;

  /// f^n(k0), every step checked as in eval. iterate(k0, 0) == k0.
  double iterate(double k0, int n) const;

  /// f^n(k0) through raw().
  double iterate_raw(double k0, int n) const noexcept;

  /// Requires beta > 0.
  CriticalPoint critical_point() const;

  /// Requires alpha > 1 (Error(NoInteriorFixedPoint) otherwise) and beta > 0.
  FixedPoint fixed_point() const;

  friend bool operator==(const PollutionMap&, const PollutionMap&) = default;

 private:
  double alpha_;
  double beta_;
};

/// Allowed overshoot of f above 1 before eval reports DomainEscape. Covers the
/// rounding of alpha_bounds(beta).upper, which grows roughly like beta ulps.
inline constexpr double kEscapeSlack = 64 * 2.220446049250313e-16;

}  // namespace chaoscert
