#include "chaoscert/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <string>

#include "chaoscert/class_g.hpp"
#include "chaoscert/error.hpp"
#include "chaoscert/kernels.hpp"
#include "chaoscert/parallel.hpp"

namespace chaoscert {

namespace {

constexpr int kBurnIn = 5000;

bool self_maps(const PollutionMap& map) { return map.alpha() <= alpha_bounds(map.beta()).upper; }

double periodic_residual(const PollutionMap& map, double x, int p) { return map.iterate_raw(x, p) - x; }

// Bisection to the last representable split; f^p is steep, so no secant.
double bisect_periodic(const PollutionMap& map, double lo, double hi, int p) {
  double rlo = periodic_residual(map, lo, p);
  for (int i = 0; i < 200; ++i) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double r = periodic_residual(map, mid, p);
    if (r == 0.0) return mid;
    if ((r < 0.0) == (rlo < 0.0))
      lo = mid, rlo = r;
    else
      hi = mid;
  }
  const double rhi = periodic_residual(map, hi, p);
  return std::fabs(rlo) <= std::fabs(rhi) ? lo : hi;
}

std::optional<OrbitFinding> accept(const PollutionMap& map, double x, int p, OrbitMethod method) {
  const double r = std::fabs(periodic_residual(map, x, p));
  if (!(r <= kOrbitResidual)) return std::nullopt;
  if (minimal_period(map, x, p) != p) return std::nullopt;
  return OrbitFinding{p, x, r, method};
}

// Least-squares coefficients of y ~ c0 * n + c1 * log n + c2.
std::array<double, 3> fit_growth(const std::vector<double>& n, const std::vector<double>& y) {
  double a[3][4] = {};
  for (std::size_t i = 0; i < n.size(); ++i) {
    const double row[3] = {n[i], std::log(n[i]), 1.0};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) a[r][c] += row[r] * row[c];
      a[r][3] += row[r] * y[i];
    }
  }
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    for (int c = 0; c < 4; ++c) std::swap(a[col][c], a[piv][c]);
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return {a[0][3] / a[0][0], a[1][3] / a[1][1], a[2][3] / a[2][2]};
}

std::vector<double> exact_lap_counts(const PollutionMap& map, int levels) {
  const double m = map.critical_point().m;
  // Endpoint codes: 0 -> point 0, -1 -> point 1, j >= 1 -> f^j(m).
  std::vector<double> orbit(static_cast<std::size_t>(levels) + 2);
  orbit[0] = m;
  for (std::size_t j = 1; j < orbit.size(); ++j) orbit[j] = map.raw(orbit[j - 1]);
  auto value = [&](int code) { return code == 0 ? 0.0 : code < 0 ? 1.0 : orbit[static_cast<std::size_t>(code)]; };
  auto image = [](int code) { return code <= 0 ? 0 : code + 1; };
  auto ordered = [&](int a, int b) {
    const double va = value(a), vb = value(b);
    return (va < vb || (va == vb && a <= b)) ? std::pair{a, b} : std::pair{b, a};
  };

  std::map<std::pair<int, int>, double> laps{{ordered(0, -1), 1.0}};
  std::vector<double> counts;
  counts.reserve(static_cast<std::size_t>(levels));
  for (int n = 0; n < levels; ++n) {
    std::map<std::pair<int, int>, double> next;
    double total = 0.0;
    for (const auto& [ends, count] : laps) {
      const double u = value(ends.first), v = value(ends.second);
      if (u < m && m < v) {
        next[ordered(image(ends.first), 1)] += count;
        next[ordered(image(ends.second), 1)] += count;
        total += 2.0 * count;
      } else {
        next[ordered(image(ends.first), image(ends.second))] += count;
        total += count;
      }
    }
    laps = std::move(next);
    counts.push_back(total);
  }
  return counts;
}

std::vector<long> sampled_counts(const PollutionMap& map, int levels, int scan_points, bool& saturated) {
  const auto n = static_cast<std::size_t>(scan_points);
  std::vector<double> orbit(n), sign(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) orbit[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
  const auto& kt = kernels::active();
  const long limit = scan_points / 8;
  std::vector<long> out;
  saturated = false;
  for (int level = 0; level < levels; ++level) {
    parallel_for(
        n,
        [&](std::size_t b, std::size_t e) {
          kt.lap_sign_step(map.alpha(), map.beta(), std::span(orbit).subspan(b, e - b),
                           std::span(sign).subspan(b, e - b));
        },
        1 << 14);
    long changes = 0;
    double last = 0.0;
    for (double s : sign) {
      if (s == 0.0) continue;
      if (last != 0.0 && s != last) ++changes;
      last = s;
    }
    if (changes + 1 >= limit) {
      saturated = true;
      break;
    }
    out.push_back(changes + 1);
  }
  return out;
}

}  // namespace

std::string_view to_string(OrbitMethod m) noexcept {
  return m == OrbitMethod::CycleDetect ? "cycle-detect" : "root-scan";
}

int minimal_period(const PollutionMap& map, double x, int max_period, double tol) {
  double y = x;
  for (int d = 1; d <= max_period; ++d) {
    y = map.raw(y);
    if (std::fabs(y - x) <= tol) return d;
  }
  return 0;
}

std::optional<OrbitFinding> find_odd_cycle(const PollutionMap& map, int max_period, int scan_points) {
  if (max_period < 3 || max_period % 2 == 0)
    throw Error(ErrorCode::InvalidArgument, "max_period must be odd and >= 3");
  if (scan_points < 10000) throw Error(ErrorCode::InvalidArgument, "scan_points must be >= 10^4");
  if (!self_maps(map)) throw Error(ErrorCode::DomainEscape, "map does not send [0,1] into itself");

  double x = map.critical_point().m;
  for (int i = 0; i < kBurnIn; ++i) x = map.raw(x);
  const int attracting = minimal_period(map, x, max_period);
  if (attracting > 1 && attracting % 2 == 1)
    if (auto f = accept(map, x, attracting, OrbitMethod::CycleDetect)) return f;

  const auto n = static_cast<std::size_t>(scan_points);
  std::vector<double> xs(n + 1), rs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) xs[i] = static_cast<double>(i) / static_cast<double>(n);
  const auto& kt = kernels::active();
  for (int p = 3; p <= max_period; p += 2) {
    parallel_for(
        n + 1,
        [&](std::size_t b, std::size_t e) {
          kt.iterate_residual(map.alpha(), map.beta(), p, std::span(xs).subspan(b, e - b),
                              std::span(rs).subspan(b, e - b));
        },
        1 << 14);
    for (std::size_t i = 0; i < n; ++i) {
      double root;
      if (rs[i] == 0.0)
        root = xs[i];
      else if (rs[i] * rs[i + 1] < 0.0)
        root = bisect_periodic(map, xs[i], xs[i + 1], p);
      else
        continue;
      if (auto f = accept(map, root, p, OrbitMethod::RootScan)) return f;
    }
  }
  return std::nullopt;
}

std::vector<long> sampled_lap_counts(const PollutionMap& map, int levels, int scan_points) {
  if (levels < 1) throw Error(ErrorCode::InvalidArgument, "levels must be >= 1");
  if (scan_points < 1000) throw Error(ErrorCode::InvalidArgument, "scan_points must be >= 1000");
  if (!self_maps(map)) throw Error(ErrorCode::DomainEscape, "map does not send [0,1] into itself");
  bool saturated = false;
  auto counts = sampled_counts(map, levels, scan_points, saturated);
  if (saturated)
    throw Error(ErrorCode::SaturatedScan, "lap count at level " + std::to_string(counts.size() + 1) +
                                              " reached the scan resolution; increase scan_points");
  return counts;
}

EntropyEstimate lap_entropy(const PollutionMap& map, int levels, int scan_points) {
  if (levels < 8 || levels > 20) throw Error(ErrorCode::InvalidArgument, "levels must be in [8, 20]");
  if (scan_points < 100000) throw Error(ErrorCode::InvalidArgument, "scan_points must be >= 10^5");
  if (!self_maps(map)) throw Error(ErrorCode::DomainEscape, "map does not send [0,1] into itself");

  EntropyEstimate est{0.0, levels, exact_lap_counts(map, levels), {}};
  bool saturated = false;
  est.sampled_laps = sampled_counts(map, levels, scan_points, saturated);

  std::vector<double> n, y;
  for (int i = levels / 2; i < levels; ++i) {
    n.push_back(i + 1.0);
    y.push_back(std::log(est.laps_per_level[static_cast<std::size_t>(i)]));
  }
  est.value = std::max(0.0, fit_growth(n, y)[0]);
  return est;
}

double baseline_no_chaos(double gamma, double s, double A, double k0, int n) {
  return baseline_residuals(gamma, s, A, k0, n).back();
}

std::vector<double> baseline_residuals(double gamma, double s, double A, double k0, int n) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw Error(ErrorCode::InvalidArgument, "gamma must lie in (0, 1)");
  if (!(s * A > 0.0) || !std::isfinite(s * A)) throw Error(ErrorCode::InvalidArgument, "s*A must be > 0");
  if (!(k0 > 0.0) || !std::isfinite(k0)) throw Error(ErrorCode::InvalidArgument, "k0 must be > 0");
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be >= 0");
  const double sa = s * A;
  const double steady = std::pow(sa, 1.0 / (1.0 - gamma));
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  double k = k0;
  out.push_back(std::fabs(k - steady));
  for (int t = 0; t < n; ++t) {
    k = sa * std::pow(k, gamma);
    out.push_back(std::fabs(k - steady));
  }
  return out;
}

}  // namespace chaoscert
