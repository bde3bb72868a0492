#pragma once

// Parameters for every subcommand. Built-in defaults live here; a key=value
// config file (--config or CHAOSCERT_CONFIG) overrides them and flags override both.

#include <string>

#include "chaoscert/dkm_criterion.hpp"
#include "chaoscert/oracle.hpp"
#include "chaoscert/region_scan.hpp"
#include "chaoscert/threshold_finder.hpp"

namespace cli {

inline constexpr int kExitUsage = 64;
inline constexpr int kExitInvalidInput = 65;
inline constexpr int kExitIo = 74;
inline constexpr int kExitFailure = 3;

struct RunConfig {
  unsigned threads = 0;
  std::string kernel = "auto";

  // certify
  double alpha = 0.0;
  double beta = 0.0;
  int membership_grid = 10000;
  int pi_subdivisions = chaoscert::kCertifySubdivisions;

  // threshold
  double tol = chaoscert::kDefaultThresholdTol;
  std::string threshold_format = "text";

  // sweep
  std::string sweep_beta_range = "1:10";
  int sweep_n = 19;
  std::string sweep_format = "csv";
  std::string sweep_out = "thresholds.csv";

  // scan
  std::string scan_alpha_range = "0:30";
  std::string scan_beta_range = "0:12";
  int nx = chaoscert::kDefaultNx;
  int ny = chaoscert::kDefaultNy;
  std::string scan_out = "region.csv";

  // curves
  double curve_beta = 2.0;
  std::string curve_alpha_range;  // empty: class G interval, upper end +10%
  int curve_n = 200;
  int curve_subdivisions = chaoscert::kCurveSubdivisions;
  std::string curve_out = "curves.csv";

  // oracle
  int max_period = chaoscert::kDefaultMaxPeriod;
  int orbit_scan = chaoscert::kDefaultOrbitScan;
  int entropy_levels = chaoscert::kDefaultEntropyLevels;
  int entropy_scan = chaoscert::kDefaultEntropyScan;
};

/// "lo:hi" with finite lo < hi. Throws chaoscert::Error(InvalidArgument).
chaoscert::Range parse_range(const std::string& text, const char* what);

/// Throws chaoscert::Error(InvalidArgument) naming the first bad parameter.
void require_finite_positive(double v, const char* what);
void require_at_least(long v, long min, const char* what);

}  // namespace cli
