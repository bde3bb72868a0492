#include "chaoscert/map_core.hpp"

#include <cmath>
#include <string>

#include "chaoscert/error.hpp"
#include "chaoscert/kernels.hpp"

namespace chaoscert {

namespace {

std::string params(double alpha, double beta) {
  return "alpha=" + std::to_string(alpha) + ", beta=" + std::to_string(beta);
}

}  // namespace

PollutionMap::PollutionMap(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!std::isfinite(alpha) || !(alpha > 0.0))
    throw Error(ErrorCode::InvalidArgument, "alpha must be finite and > 0 (" + params(alpha, beta) + ")");
  if (!std::isfinite(beta) || !(beta >= 0.0))
    throw Error(ErrorCode::InvalidArgument, "beta must be finite and >= 0 (" + params(alpha, beta) + ")");
}

double PollutionMap::raw(double k) const noexcept { return kernels::map_value(alpha_, beta_, k); }

double PollutionMap::eval(double k) const {
  if (!(k >= 0.0 && k <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "k=" + std::to_string(k) + " outside [0,1]");
  const double v = raw(k);
  if (v <= 1.0) return v;
  if (v <= 1.0 + kEscapeSlack) return 1.0;
  throw Error(ErrorCode::DomainEscape,
              "f(" + std::to_string(k) + ")=" + std::to_string(v) + " > 1 (" + params(alpha_, beta_) + ")");
}

double PollutionMap::derivative(double k) const {
  if (!(k >= 0.0 && k <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "k=" + std::to_string(k) + " outside [0,1]");
  if (k == 1.0 && beta_ < 1.0)
    throw Error(ErrorCode::SingularPoint, "f' is singular at k=1 for beta < 1 (" + params(alpha_, beta_) + ")");
  return alpha_ * kernels::pollution_pow(1.0 - k, beta_ - 1.0) * (1.0 - k - beta_ * k);
}

double PollutionMap::iterate(double k0, int n) const {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "iteration count must be >= 0");
  double k = k0;
  if (n == 0 && !(k >= 0.0 && k <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "k=" + std::to_string(k) + " outside [0,1]");
  for (int i = 0; i < n; ++i) k = eval(k);
  return k;
}

double PollutionMap::iterate_raw(double k0, int n) const noexcept {
  double k = k0;
  for (int i = 0; i < n; ++i) k = raw(k);
  return k;
}

CriticalPoint PollutionMap::critical_point() const {
  if (!(beta_ > 0.0))
    throw Error(ErrorCode::InvalidArgument, "critical point requires beta > 0 (" + params(alpha_, beta_) + ")");
  return {1.0 / (1.0 + beta_)};
}

FixedPoint PollutionMap::fixed_point() const {
  if (!(beta_ > 0.0))
    throw Error(ErrorCode::InvalidArgument, "fixed point requires beta > 0 (" + params(alpha_, beta_) + ")");
  if (!(alpha_ > 1.0))
    throw Error(ErrorCode::NoInteriorFixedPoint, "alpha <= 1 has no interior fixed point (" + params(alpha_, beta_) + ")");
  return {1.0 - std::pow(alpha_, -1.0 / beta_)};
}

}  // namespace chaoscert
