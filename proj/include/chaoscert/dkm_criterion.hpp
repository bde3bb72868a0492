#pragma once

#include <string_view>
#include <utility>

#include "chaoscert/map_core.hpp"
#include "chaoscert/period_solver.hpp"

namespace chaoscert {

/// Verdict of the odd-cycle / turbulence criterion for unimodal maps in class G:
///   odd-period cycle  <=>  f^2(m) < m  and  f^3(m) <  min Pi
///   f^2 turbulent     <=>  f^2(m) < m  and  f^3(m) <= max Pi
enum class ChaosStatus { NotInG, NoOddCycleNoTurbulence, TurbulentOnly, OddCycleAndTurbulent };

std::string_view to_string(ChaosStatus s) noexcept;
/// Throws Error(InvalidArgument) for unknown names.
ChaosStatus parse_chaos_status(std::string_view name);

/// Signed distances; positive means the strict inequality holds.
struct VerdictMargins {
  double peak_return;  // m - f^2(m)
  double odd_cycle;    // min Pi - f^3(m)
  double turbulence;   // max Pi - f^3(m)
};

/// Values that are undefined for a verdict (Pi outside class G, iterates that
/// leave the domain) are NaN.
struct ChaosVerdict {
  ChaosStatus status;
  double alpha;
  double beta;
  double m;
  double f2m;
  double f3m;
  double min_pi;
  double max_pi;
  VerdictMargins margins;
};

/// Field-wise equality with NaN == NaN.
bool same_verdict(const ChaosVerdict& a, const ChaosVerdict& b) noexcept;

/// Absolute band inside which f^3(m) counts as equal to min Pi / max Pi.
inline constexpr double kVerdictEqualityBand = 1e-10;
/// Slack within which the direct and closed-form peak-return tests may disagree.
inline constexpr double kFormulationSlack = 1e-10;

/// f^2(m) < m evaluated twice: directly by iterating the map and through the
/// closed form 1 - alpha^2 q ((beta + 1 - alpha q)/(beta + 1))^beta > 0 with
/// q = (beta/(beta+1))^beta.
struct F2mCondition {
  bool satisfied;  // closed form > 0
  double lhs;      // closed-form value
  double f2m;      // direct f^2(m), raw iteration
};

/// Requires beta > 0. Throws Error(InconsistentFormulation) if the two routes
/// disagree while both are more than kFormulationSlack away from equality.
F2mCondition f2m_condition(const PollutionMap& map);

struct ClassifyOptions {
  int membership_grid = 10000;
  int pi_subdivisions = kCertifySubdivisions;
};

/// Never throws for valid maps outside class G (returns NotInG). Requires beta > 0.
/// An empty Pi with f^2(m) < m is reported as Error(Inconclusive).
ChaosVerdict classify(const PollutionMap& map, const ClassifyOptions& options = {});

/// Classifies at alpha_star - epsilon and alpha_star + epsilon.
std::pair<ChaosVerdict, ChaosVerdict> verdict_boundary_probe(double beta, double alpha_star, double epsilon,
                                                             const ClassifyOptions& options = {});

}  // namespace chaoscert
