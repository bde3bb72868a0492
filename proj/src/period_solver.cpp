#include "chaoscert/period_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "chaoscert/class_g.hpp"
#include "chaoscert/error.hpp"
#include "chaoscert/kernels.hpp"
#include "chaoscert/parallel.hpp"
#include "chaoscert/serialize.hpp"

namespace chaoscert {

namespace {

constexpr int kMaxRefineIterations = 200;
constexpr double kRefineWidth = 1e-13;
constexpr double kRefineResidual = 1e-12;
constexpr double kTangencySlope = 1e-6;

bool same_sign(double a, double b) { return (a > 0.0 && b > 0.0) || (a < 0.0 && b < 0.0); }

double minimise_abs_residual(const PollutionMap& map, double lo, double hi) {
  if (!(hi > lo)) return lo;
  auto g = [&](double x) { return std::fabs(second_iterate_residual(map, x)); };
  constexpr int kCoarse = 64;
  double best = lo, best_v = g(lo);
  for (int i = 1; i <= kCoarse; ++i) {
    const double x = lo + (hi - lo) * i / kCoarse;
    const double v = g(x);
    if (v < best_v) best = x, best_v = v;
  }
  // Golden-section on the coarse cell around the best sample.
  const double cell = (hi - lo) / kCoarse;
  double a = std::max(lo, best - cell), b = std::min(hi, best + cell);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double gc = g(c), gd = g(d);
  for (int i = 0; i < 100 && b - a > 1e-15; ++i) {
    if (gc < gd) {
      b = d, d = c, gd = gc;
      c = b - inv_phi * (b - a), gc = g(c);
    } else {
      a = c, c = d, gc = gd;
      d = a + inv_phi * (b - a), gd = g(d);
    }
  }
  const double x = gc < gd ? c : d;
  return g(x) < best_v ? x : best;
}

double second_iterate_slope(const PollutionMap& map, double x) {
  const double fx = map.raw(x);
  if (!(fx >= 0.0 && fx <= 1.0) || !(x >= 0.0 && x <= 1.0)) return std::numeric_limits<double>::quiet_NaN();
  if (map.beta() < 1.0 && (x == 1.0 || fx == 1.0)) return std::numeric_limits<double>::quiet_NaN();
  return map.derivative(fx) * map.derivative(x);
}

bool tangent_at(const PollutionMap& map, double x) {
  const double s = second_iterate_slope(map, x);
  return std::isfinite(s) && std::fabs(s - 1.0) <= kTangencySlope;
}

double dedup_radius(bool suspect) { return suspect ? kSuspectDedupRadius : kRootDedupRadius; }

struct Refined {
  double x;
  bool suspect;
};

std::vector<Refined> refined_roots(const PollutionMap& map, double lo, double hi, int subdivisions) {
  std::vector<Refined> out;
  for (const auto& b : isolate_roots(map, lo, hi, subdivisions)) {
    const double x = refine_root(map, b);
    if (!(std::fabs(second_iterate_residual(map, x)) <= kPiResidual)) continue;
    out.push_back({x, b.multiplicity_suspect || tangent_at(map, x)});
  }
  std::sort(out.begin(), out.end(), [](const Refined& a, const Refined& b) { return a.x < b.x; });
  std::vector<Refined> unique;
  for (const auto& r : out) {
    if (!unique.empty() && r.x - unique.back().x <= dedup_radius(unique.back().suspect || r.suspect)) {
      unique.back().suspect = unique.back().suspect || r.suspect;
      continue;
    }
    unique.push_back(r);
  }
  return unique;
}

// Replaces a scanned root within the dedup radius of `x` by `x`, or inserts it.
void merge_exact(std::vector<Refined>& roots, double x, bool suspect) {
  for (auto& r : roots) {
    if (std::fabs(r.x - x) <= dedup_radius(r.suspect || suspect)) {
      r.x = x;
      r.suspect = r.suspect || suspect;
      return;
    }
  }
  roots.push_back({x, suspect});
  std::sort(roots.begin(), roots.end(), [](const Refined& a, const Refined& b) { return a.x < b.x; });
}

}  // namespace

double second_iterate_residual(const PollutionMap& map, double k) noexcept {
  return map.raw(map.raw(k)) - k;
}

std::vector<RootBracket> isolate_roots(const PollutionMap& map, double lo, double hi, int subdivisions) {
  if (subdivisions < 1000) throw Error(ErrorCode::InvalidArgument, "subdivisions must be >= 1000");
  if (!(lo < hi)) throw Error(ErrorCode::InvalidArgument, "empty scan interval");

  const auto n = static_cast<std::size_t>(subdivisions);
  std::vector<double> xs(n + 1), rs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) xs[i] = i == n ? hi : lo + (hi - lo) * static_cast<double>(i) / n;
  const auto& kt = kernels::active();
  parallel_for(
      n + 1,
      [&](std::size_t b, std::size_t e) {
        kt.iterate_residual(map.alpha(), map.beta(), 2, std::span(xs).subspan(b, e - b),
                            std::span(rs).subspan(b, e - b));
      },
      1 << 14);

  auto degenerate = [&](std::size_t i) { return std::fabs(rs[i]) <= kDegenerateResidual; };
  auto usable = [&](std::size_t i) { return std::isfinite(rs[i]) && !degenerate(i); };

  std::vector<RootBracket> out;
  std::size_t i = 0;
  while (i <= n) {
    if (degenerate(i)) {
      std::size_t e = i;
      while (e + 1 <= n && degenerate(e + 1)) ++e;
      const bool run = e > i;
      if (i > 0 && e < n && usable(i - 1) && usable(e + 1) && rs[i - 1] * rs[e + 1] < 0.0) {
        out.push_back({xs[i - 1], xs[e + 1], true, run});
      } else {
        out.push_back({xs[i], xs[e], false, run || (i > 0 && e < n)});
      }
      i = e + 1;
      continue;
    }
    if (i < n && usable(i) && usable(i + 1) && rs[i] * rs[i + 1] < 0.0) {
      out.push_back({xs[i], xs[i + 1], true, false});
    } else if (i > 0 && i < n && usable(i - 1) && usable(i) && usable(i + 1) &&
               std::fabs(rs[i]) < kTangencyResidual && std::fabs(rs[i]) <= std::fabs(rs[i - 1]) &&
               std::fabs(rs[i]) <= std::fabs(rs[i + 1]) && same_sign(rs[i - 1], rs[i]) &&
               same_sign(rs[i], rs[i + 1])) {
      out.push_back({xs[i - 1], xs[i + 1], false, true});
    }
    ++i;
  }
  return out;
}

double refine_root(const PollutionMap& map, const RootBracket& bracket) {
  if (!bracket.sign_change) return minimise_abs_residual(map, bracket.lo, bracket.hi);

  double lo = bracket.lo, hi = bracket.hi;
  double rlo = second_iterate_residual(map, lo), rhi = second_iterate_residual(map, hi);
  if (rlo == 0.0) return lo;
  if (rhi == 0.0) return hi;
  if (!(rlo * rhi < 0.0))
    throw Error(ErrorCode::InvalidArgument, "bracket [" + format_double(lo) + ", " + format_double(hi) +
                                                "] has no sign change");

  auto update = [&](double x) {
    const double r = second_iterate_residual(map, x);
    if (r == 0.0) {
      lo = hi = x;
      rlo = rhi = 0.0;
    } else if ((r < 0.0) == (rlo < 0.0)) {
      lo = x, rlo = r;
    } else {
      hi = x, rhi = r;
    }
  };
  auto best = [&] { return std::fabs(rlo) <= std::fabs(rhi) ? lo : hi; };

  for (int it = 0; it < kMaxRefineIterations; ++it) {
    const double width = hi - lo;
    if (width <= kRefineWidth && std::min(std::fabs(rlo), std::fabs(rhi)) <= kRefineResidual) return best();
    const double mid = lo + 0.5 * width;
    if (mid <= lo || mid >= hi) break;

    double x = (lo * rhi - hi * rlo) / (rhi - rlo);
    if (!(x > lo && x < hi)) x = mid;
    update(x);
    if (lo == hi) return lo;
    if (hi - lo > 0.5 * width) {
      const double m2 = lo + 0.5 * (hi - lo);
      if (m2 > lo && m2 < hi) update(m2);
      if (lo == hi) return lo;
    }
  }
  const double x = best();
  if (std::fabs(second_iterate_residual(map, x)) <= kRefineResidual) return x;
  throw Error(ErrorCode::NoConvergence, "root refinement stalled in [" + format_double(lo) + ", " +
                                            format_double(hi) + "]");
}

PiSet compute_pi(const PollutionMap& map, int subdivisions) {
  const double alpha = map.alpha(), beta = map.beta();
  if (!(beta > 0.0) || !alpha_bounds(beta).contains(alpha))
    throw Error(ErrorCode::InvalidArgument, "Pi is defined for maps in class G only (alpha=" +
                                                format_double(alpha) + ", beta=" + format_double(beta) + ")");
  const double m = map.critical_point().m;
  const double z = map.fixed_point().z;

  auto roots = refined_roots(map, m, 1.0, subdivisions);
  if (z >= m - kPiFilterSlack) merge_exact(roots, z, tangent_at(map, z));

  PiSet pi{{}, 0.0, 0.0, alpha, beta};
  for (const auto& r : roots) {
    const double fx = map.raw(r.x);
    const bool in_range = r.x >= m - kPiFilterSlack && r.x <= 1.0;
    const bool image_in_range = fx >= m - kPiFilterSlack && fx <= 1.0;
    if (!in_range || !image_in_range) continue;
    const RootKind kind = std::fabs(fx - r.x) <= kPiResidual ? RootKind::FixedPoint : RootKind::PeriodTwo;
    pi.roots.push_back({r.x, kind, r.suspect});
  }
  if (pi.roots.empty())
    throw Error(ErrorCode::EmptyPi, "no root of f^2(k)=k survives the Pi filter (alpha=" + format_double(alpha) +
                                        ", beta=" + format_double(beta) + ")");
  pi.min_pi = pi.roots.front().x;
  pi.max_pi = pi.roots.back().x;
  return pi;
}

std::optional<std::pair<double, double>> period_two_closed_form_beta1(double alpha) {
  if (!(alpha > 0.0)) throw Error(ErrorCode::InvalidArgument, "alpha must be > 0");
  const double disc = alpha * alpha - 2.0 * alpha - 3.0;
  if (disc < 0.0) return std::nullopt;
  const double s = std::sqrt(disc);
  return std::pair{(alpha - s + 1.0) / (2.0 * alpha), (alpha + s + 1.0) / (2.0 * alpha)};
}

std::string_view to_string(CurveKind kind) noexcept {
  switch (kind) {
    case CurveKind::Fixed: return "fixed";
    case CurveKind::PeriodTwo: return "period2";
    case CurveKind::MLine: return "m_line";
  }
  return "unknown";
}

std::pair<double, double> default_curve_alpha_range(double beta) {
  const auto b = alpha_bounds(beta);
  return {b.lower, b.upper * 1.1};
}

std::vector<CurveSample> fixed_curve_samples(double beta, double alpha_lo, double alpha_hi, int n,
                                             int subdivisions) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "curve sampling needs n >= 2");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw Error(ErrorCode::InvalidArgument, "beta must be > 0");
  if (!(alpha_lo > 0.0) || !(alpha_hi >= alpha_lo) || !std::isfinite(alpha_hi))
    throw Error(ErrorCode::InvalidArgument, "alpha range must satisfy 0 < lo <= hi");

  const double m = 1.0 / (1.0 + beta);
  std::vector<std::vector<CurveSample>> per_alpha(static_cast<std::size_t>(n));
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t begin, std::size_t end) {
    for (std::size_t j = begin; j < end; ++j) {
      const double alpha = j + 1 == static_cast<std::size_t>(n)
                               ? alpha_hi
                               : alpha_lo + (alpha_hi - alpha_lo) * static_cast<double>(j) / (n - 1);
      const PollutionMap map(alpha, beta);
      auto& rows = per_alpha[j];
      rows.push_back({beta, alpha, m, CurveKind::MLine});
      std::optional<double> z;
      if (alpha > 1.0) {
        z = map.fixed_point().z;
        rows.push_back({beta, alpha, *z, CurveKind::Fixed});
      }
      for (const auto& r : refined_roots(map, 0.0, 1.0, subdivisions)) {
        if (r.x <= kDegenerateResidual) continue;
        if (z && std::fabs(r.x - *z) <= kRootDedupRadius) continue;
        const double fx = map.raw(r.x);
        if (!(fx >= 0.0 && fx <= 1.0 + kEscapeSlack)) continue;
        if (std::fabs(fx - r.x) <= kPiResidual) continue;
        rows.push_back({beta, alpha, r.x, CurveKind::PeriodTwo});
      }
    }
  });

  std::vector<CurveSample> out;
  for (auto& rows : per_alpha) out.insert(out.end(), rows.begin(), rows.end());
  return out;
}

void write_curves_csv(std::ostream& out, std::span<const CurveSample> rows) {
  out << "beta,alpha,k,kind\n";
  for (const auto& r : rows)
    out << format_double(r.beta) << ',' << format_double(r.alpha) << ',' << format_double(r.k) << ','
        << to_string(r.kind) << '\n';
}

}  // namespace chaoscert
