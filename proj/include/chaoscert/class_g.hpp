#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chaoscert/map_core.hpp"

namespace chaoscert {

/// alpha range (lower, upper] for which the pollution map belongs to class G:
/// lower = ((beta+1)/beta)^beta makes f(m) = m, upper = (beta+1) * lower makes f(m) = 1.
struct AlphaBounds {
  double lower;  // exclusive
  double upper;  // inclusive

  bool contains(double alpha) const noexcept { return alpha > lower && alpha <= upper; }
};

/// Requires beta > 0.
AlphaBounds alpha_bounds(double beta);

namespace gcheck {
inline constexpr std::string_view kSelfMap = "g maps [a,b] into [a,b]";
inline constexpr std::string_view kIncreasing = "strictly increasing on [a,m]";
inline constexpr std::string_view kDecreasing = "strictly decreasing on [m,b]";
inline constexpr std::string_view kLeftEnd = "g(a)>=a";
inline constexpr std::string_view kRightEnd = "g(b)<b";
inline constexpr std::string_view kAboveDiagonal = "g(x)>x on (a,m]";
}  // namespace gcheck

struct GCheck {
  std::string name;
  bool passed;
  double witness;
};

struct GClassReport {
  bool in_class;
  double peak_m;
  double a;
  double b;
  std::vector<GCheck> checks;

  /// nullptr when no check has that name.
  const GCheck* find(std::string_view name) const noexcept;
};

/// Tests the class G conditions on [0, 1] over a uniform grid of grid_size points
/// plus the analytic peak. Witnesses:
///   self-map        max f over the grid (must be <= 1 + kEscapeSlack, min >= 0)
///   increasing      min forward difference on [0,m]; derivative sign sampled too
///   decreasing      min backward difference on [m,1]; derivative sign sampled too
///   g(a)>=a         f(0) - 0
///   g(b)<b          f(1) - 1
///   g(x)>x          min of f(x) - x over grid points in (0, m]
/// Requires beta > 0 and grid_size >= 100.
GClassReport check_membership(const PollutionMap& map, int grid_size = 10000);

/// f(m) > m. Equivalent to alpha > alpha_bounds(beta).lower.
bool peak_exceeds_m(const PollutionMap& map);

}  // namespace chaoscert
