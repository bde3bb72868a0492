#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace chaoscert {

/// A root of a margin function in alpha, located by pre-scan and bisection.
struct ThresholdSolve {
  double alpha;
  double residual;             // margin at alpha
  int iterations;              // bisection steps
  std::vector<double> crossings;  // pre-scan cells with a sign change (left ends)
  bool multiple_crossings;     // more than one crossing; alpha is the smallest
};

/// Critical alphas for one beta.
struct ThresholdReport {
  double beta;
  double g_lower;          // class G lower bound (exclusive)
  double g_upper;          // class G upper bound (inclusive)
  double f2m_threshold;    // root of m - f^2(m)
  double chaos_threshold;  // root of z - f^3(m)
  double tol;
  ThresholdSolve f2m;
  ThresholdSolve chaos;
};

inline constexpr int kThresholdPrescan = 10000;
inline constexpr double kDefaultThresholdTol = 1e-12;

/// h(alpha) = m - f_alpha^2(m) on (g_lower, g_upper]; requires beta > 0, tol >= 1e-12.
/// Throws Error(NoSignChange) if the pre-scan finds no crossing.
ThresholdSolve solve_f2m_threshold(double beta, double tol = kDefaultThresholdTol);

/// c(alpha) = z(alpha) - f_alpha^3(m) on [f2m_threshold + 1e-9, g_upper].
ThresholdSolve solve_chaos_threshold(double beta, double tol = kDefaultThresholdTol);

/// Both thresholds plus the class G bounds.
ThresholdReport compute_thresholds(double beta, double tol = kDefaultThresholdTol);

struct SweepRow {
  double beta;
  std::optional<ThresholdReport> report;
  std::string error;  // set when report is empty
};

/// n uniformly spaced betas on [lo, hi] (lo >= 0.5, n >= 2). Per-beta failures are
/// recorded in the row and the sweep continues.
std::vector<SweepRow> threshold_sweep(double beta_lo, double beta_hi, int n, double tol = kDefaultThresholdTol);

/// Header `beta,g_lower,g_upper,f2m_threshold,chaos_threshold`, 17 significant
/// digits; failed rows carry `nan` thresholds.
void write_thresholds_csv(std::ostream& out, std::span<const SweepRow> rows);

}  // namespace chaoscert
