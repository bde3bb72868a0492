#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "chaoscert/map_core.hpp"

namespace chaoscert {

// Independent checks on the certification: direct periodic-orbit search, lap
// growth of the iterates, and the Cobb-Douglas steady state.

enum class OrbitMethod { CycleDetect, RootScan };

std::string_view to_string(OrbitMethod m) noexcept;

struct OrbitFinding {
  int period;             // minimal period
  double representative;  // one point of the orbit
  double residual;        // |f^period(x) - x|
  OrbitMethod method;
};

inline constexpr double kOrbitResidual = 1e-8;
inline constexpr int kDefaultMaxPeriod = 31;
inline constexpr int kDefaultOrbitScan = 100000;

/// Searches odd periods 3, 5, ..., max_period: first an attracting cycle reached
/// from the peak, then sign changes of f^p(x) - x on a uniform grid. Returns the
/// first orbit whose minimal period is odd and > 1. Absence is not a proof.
/// Requires max_period >= 3 odd, scan_points >= 10^4, and a self-map on [0, 1].
std::optional<OrbitFinding> find_odd_cycle(const PollutionMap& map, int max_period = kDefaultMaxPeriod,
                                           int scan_points = kDefaultOrbitScan);

/// Minimal d >= 1 with |f^d(x) - x| <= tol, searching d <= max_period; 0 if none.
int minimal_period(const PollutionMap& map, double x, int max_period, double tol = kOrbitResidual);

struct EntropyEstimate {
  double value;                        // nats, >= 0
  int levels;
  std::vector<double> laps_per_level;  // l(f^n) for n = 1..levels, exact
  std::vector<long> sampled_laps;      // grid derivative-sign counts, up to saturation
};

inline constexpr int kDefaultEntropyLevels = 20;
inline constexpr int kDefaultEntropyScan = 100000;

/// Lap numbers of f^n counted exactly by following the image interval of every lap
/// (endpoints are 0, 1, or points of the critical orbit). The estimate is the
/// coefficient h of the least-squares fit log l(n) = h n + d log n + c over the
/// last half of the levels, clamped at 0; the log n term absorbs the polynomial
/// lap growth of zero-entropy maps. Requires levels in [8, 20], scan_points >= 10^5
/// and alpha at most the class G upper bound.
EntropyEstimate lap_entropy(const PollutionMap& map, int levels = kDefaultEntropyLevels,
                            int scan_points = kDefaultEntropyScan);

/// Lap numbers of f^1..f^levels from sign changes of the sampled derivative sign
/// prod sgn(m - f^j(x)) on a midpoint grid. Throws Error(SaturatedScan) once a
/// count reaches scan_points / 8.
std::vector<long> sampled_lap_counts(const PollutionMap& map, int levels, int scan_points);

/// k_{t+1} = s A k_t^gamma from k0 for n steps; returns |k_n - (sA)^(1/(1-gamma))|.
/// Requires 0 < gamma < 1, s A > 0, k0 > 0, n >= 0.
double baseline_no_chaos(double gamma, double s, double A, double k0, int n);

/// Residuals |k_t - k*| for t = 0..n.
std::vector<double> baseline_residuals(double gamma, double s, double A, double k0, int n);

}  // namespace chaoscert
