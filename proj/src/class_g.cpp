#include "chaoscert/class_g.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "chaoscert/error.hpp"
#include "chaoscert/kernels.hpp"

namespace chaoscert {

AlphaBounds alpha_bounds(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw Error(ErrorCode::InvalidArgument, "alpha bounds require finite beta > 0");
  const double lower = std::pow((beta + 1.0) / beta, beta);
  return {lower, (beta + 1.0) * lower};
}

const GCheck* GClassReport::find(std::string_view name) const noexcept {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

GClassReport check_membership(const PollutionMap& map, int grid_size) {
  if (grid_size < 100) throw Error(ErrorCode::InvalidArgument, "grid_size must be >= 100");
  const double m = map.critical_point().m;
  const double h = 1.0 / (grid_size - 1);

  // Grid points too close to m would make the difference next to the peak
  // smaller than one ulp of f(m).
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(grid_size) + 1);
  bool placed_m = false;
  for (int i = 0; i < grid_size; ++i) {
    const double x = i == grid_size - 1 ? 1.0 : i * h;
    if (!placed_m && x >= m) {
      xs.push_back(m);
      placed_m = true;
    }
    if (std::fabs(x - m) < 0.25 * h) continue;
    xs.push_back(x);
  }
  std::vector<double> fx(xs.size());
  kernels::active().map_values(map.alpha(), map.beta(), xs, fx);

  const std::size_t im = static_cast<std::size_t>(std::find(xs.begin(), xs.end(), m) - xs.begin());
  constexpr double inf = std::numeric_limits<double>::infinity();

  double fmax = -inf, fmin = inf;
  for (double v : fx) {
    fmax = std::max(fmax, v);
    fmin = std::min(fmin, v);
  }
  const bool self_map = fmax <= 1.0 + kEscapeSlack && fmin >= 0.0;

  auto derivative_sign = [&](double x) {
    return map.alpha() * kernels::pollution_pow(1.0 - x, map.beta() - 1.0) * (1.0 - x - map.beta() * x);
  };

  double inc = inf;
  bool inc_ok = true;
  for (std::size_t i = 0; i < im; ++i) {
    const double d = fx[i + 1] - fx[i];
    inc = std::min(inc, d);
    if (!(d > 0.0)) inc_ok = false;
    if (i > 0 && std::fabs(xs[i] - m) > 1e-12 && !(derivative_sign(xs[i]) > 0.0)) inc_ok = false;
  }

  double dec = inf;
  bool dec_ok = true;
  for (std::size_t i = im; i + 1 < xs.size(); ++i) {
    const double d = fx[i] - fx[i + 1];
    dec = std::min(dec, d);
    if (!(d > 0.0)) dec_ok = false;
    if (i > im && !(derivative_sign(xs[i]) < 0.0)) dec_ok = false;
  }

  double above = inf;
  for (std::size_t i = 1; i <= im; ++i) above = std::min(above, fx[i] - xs[i]);

  const double left = fx.front() - 0.0;
  const double right = fx.back() - 1.0;

  GClassReport report{false, m, 0.0, 1.0, {}};
  report.checks = {
      {std::string(gcheck::kSelfMap), self_map, fmax},
      {std::string(gcheck::kIncreasing), inc_ok, inc},
      {std::string(gcheck::kDecreasing), dec_ok, dec},
      {std::string(gcheck::kLeftEnd), left >= 0.0, left},
      {std::string(gcheck::kRightEnd), right < 0.0, right},
      {std::string(gcheck::kAboveDiagonal), above > 0.0, above},
  };
  report.in_class = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const GCheck& c) { return c.passed; });
  return report;
}

bool peak_exceeds_m(const PollutionMap& map) {
  const double m = map.critical_point().m;
  return map.raw(m) > m;
}

}  // namespace chaoscert
