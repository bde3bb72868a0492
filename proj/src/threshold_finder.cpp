#include "chaoscert/threshold_finder.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "chaoscert/class_g.hpp"
#include "chaoscert/error.hpp"
#include "chaoscert/kernels.hpp"
#include "chaoscert/map_core.hpp"
#include "chaoscert/parallel.hpp"
#include "chaoscert/serialize.hpp"

namespace chaoscert {

namespace {

constexpr double kChaosOffset = 1e-9;
constexpr int kMaxBisections = 400;

void check_inputs(double beta, double tol) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw Error(ErrorCode::InvalidArgument, "beta must be finite and > 0");
  if (!(tol >= 1e-12)) throw Error(ErrorCode::InvalidArgument, "tol must be >= 1e-12");
}

// Margin values at n+1 alphas on [lo, hi]; first column is f^2(m), second f^3(m).
struct PeakScan {
  std::vector<double> alpha, f2m, f3m;
};

PeakScan scan_peak(double beta, double lo, double hi, int n) {
  PeakScan s;
  const auto count = static_cast<std::size_t>(n) + 1;
  s.alpha.resize(count);
  s.f2m.resize(count);
  s.f3m.resize(count);
  for (std::size_t i = 0; i < count; ++i)
    s.alpha[i] = i + 1 == count ? hi : lo + (hi - lo) * static_cast<double>(i) / n;
  kernels::active().peak_iterates(beta, s.alpha, s.f2m, s.f3m);
  return s;
}

ThresholdSolve bisect(const std::function<double(double)>& margin, const std::vector<double>& alphas,
                      const std::vector<double>& values, double tol, const char* what) {
  ThresholdSolve out{std::numeric_limits<double>::quiet_NaN(), 0.0, 0, {}, false};
  std::size_t first = alphas.size();
  for (std::size_t i = 0; i + 1 < alphas.size(); ++i) {
    if (values[i] == 0.0 || values[i] * values[i + 1] < 0.0) {
      out.crossings.push_back(alphas[i]);
      if (first == alphas.size()) first = i;
    }
  }
  if (out.crossings.empty())
    throw Error(ErrorCode::NoSignChange, std::string(what) + " margin has constant sign on the bracket");
  out.multiple_crossings = out.crossings.size() > 1;

  double lo = alphas[first], hi = alphas[first + 1];
  double mlo = values[first];
  if (mlo == 0.0) {
    out.alpha = lo;
    out.residual = 0.0;
    return out;
  }
  while (hi - lo > tol && out.iterations < kMaxBisections) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double v = margin(mid);
    ++out.iterations;
    if (v == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((v < 0.0) == (mlo < 0.0))
      lo = mid, mlo = v;
    else
      hi = mid;
  }
  out.alpha = lo + 0.5 * (hi - lo);
  out.residual = margin(out.alpha);
  return out;
}

}  // namespace

ThresholdSolve solve_f2m_threshold(double beta, double tol) {
  check_inputs(beta, tol);
  const auto bounds = alpha_bounds(beta);
  const double m = 1.0 / (1.0 + beta);
  // The lower bound itself is a root (f(m) = m), so the scan starts one cell in.
  auto scan = scan_peak(beta, bounds.lower, bounds.upper, kThresholdPrescan);
  scan.alpha.erase(scan.alpha.begin());
  scan.f2m.erase(scan.f2m.begin());
  std::vector<double> h(scan.f2m.size());
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = m - scan.f2m[i];
  auto margin = [&](double a) { return m - PollutionMap(a, beta).iterate_raw(m, 2); };
  return bisect(margin, scan.alpha, h, tol, "f^2(m)");
}

ThresholdSolve solve_chaos_threshold(double beta, double tol) {
  check_inputs(beta, tol);
  const auto bounds = alpha_bounds(beta);
  const double m = 1.0 / (1.0 + beta);
  const double start = solve_f2m_threshold(beta, tol).alpha + kChaosOffset;
  const auto scan = scan_peak(beta, start, bounds.upper, kThresholdPrescan);
  auto z = [&](double a) { return 1.0 - std::pow(a, -1.0 / beta); };
  std::vector<double> c(scan.f3m.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = z(scan.alpha[i]) - scan.f3m[i];
  auto margin = [&](double a) { return z(a) - PollutionMap(a, beta).iterate_raw(m, 3); };
  return bisect(margin, scan.alpha, c, tol, "z - f^3(m)");
}

ThresholdReport compute_thresholds(double beta, double tol) {
  check_inputs(beta, tol);
  const auto bounds = alpha_bounds(beta);
  ThresholdReport r{beta, bounds.lower, bounds.upper, 0.0, 0.0, tol, solve_f2m_threshold(beta, tol),
                    solve_chaos_threshold(beta, tol)};
  r.f2m_threshold = r.f2m.alpha;
  r.chaos_threshold = r.chaos.alpha;
  return r;
}

std::vector<SweepRow> threshold_sweep(double beta_lo, double beta_hi, int n, double tol) {
  if (!(beta_lo >= 0.5)) throw Error(ErrorCode::InvalidArgument, "sweep requires beta_lo >= 0.5");
  if (!(beta_hi >= beta_lo) || !std::isfinite(beta_hi))
    throw Error(ErrorCode::InvalidArgument, "sweep requires beta_lo <= beta_hi");
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "sweep requires n >= 2");

  std::vector<SweepRow> rows(static_cast<std::size_t>(n));
  parallel_for(rows.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const double beta = i + 1 == rows.size()
                              ? beta_hi
                              : beta_lo + (beta_hi - beta_lo) * static_cast<double>(i) / (n - 1);
      rows[i].beta = beta;
      try {
        rows[i].report = compute_thresholds(beta, tol);
      } catch (const Error& err) {
        rows[i].error = err.what();
      }
    }
  });
  return rows;
}

void write_thresholds_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << "beta,g_lower,g_upper,f2m_threshold,chaos_threshold\n";
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  for (const auto& row : rows) {
    const auto b = alpha_bounds(row.beta);
    out << format_double(row.beta) << ',' << format_double(b.lower) << ',' << format_double(b.upper) << ','
        << format_double(row.report ? row.report->f2m_threshold : nan) << ','
        << format_double(row.report ? row.report->chaos_threshold : nan) << '\n';
  }
}

}  // namespace chaoscert
