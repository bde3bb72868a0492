#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "chaoscert/map_core.hpp"

namespace chaoscert {

/// Interval [lo, hi] holding a root of f^2(k) - k.
///
/// sign_change brackets have lo < hi and residuals of opposite sign at the ends.
/// Brackets without a sign change come from runs of grid points with
/// |residual| <= kDegenerateResidual (lo == hi for a single point) or from local
/// minima of |residual| below kTangencyResidual; those and any run longer than one
/// point carry multiplicity_suspect.
struct RootBracket {
  double lo;
  double hi;
  bool sign_change;
  bool multiplicity_suspect = false;
};

inline constexpr double kDegenerateResidual = 1e-12;
inline constexpr double kTangencyResidual = 1e-9;
inline constexpr double kRootDedupRadius = 1e-9;
// A root of multiplicity three is only located to about cbrt(residual), so
// suspect roots merge over a wider radius.
inline constexpr double kSuspectDedupRadius = 1e-4;
inline constexpr double kPiResidual = 1e-10;
inline constexpr double kPiFilterSlack = 1e-12;
inline constexpr int kCertifySubdivisions = 100000;
inline constexpr int kCurveSubdivisions = 1000;

/// f^2(k) - k without range checks.
double second_iterate_residual(const PollutionMap& map, double k) noexcept;

/// Uniform scan of [lo, hi] with `subdivisions` cells (subdivisions >= 1000).
std::vector<RootBracket> isolate_roots(const PollutionMap& map, double lo, double hi,
                                       int subdivisions = kCertifySubdivisions);

/// Safeguarded secant/bisection on a sign-change bracket until the width is
/// <= 1e-13 and |f^2(x) - x| <= 1e-12; throws Error(NoConvergence) after 200
/// iterations. Brackets without a sign change return the minimiser of
/// |f^2(x) - x| on [lo, hi]; callers check its residual.
double refine_root(const PollutionMap& map, const RootBracket& bracket);

enum class RootKind { FixedPoint, PeriodTwo };

struct PiRoot {
  double x;
  RootKind kind;
  bool multiplicity_suspect;
};

/// Pi = { x in [m, 1] : f(x) in [m, 1], f^2(x) = x }.
struct PiSet {
  std::vector<PiRoot> roots;  // ascending
  double min_pi;
  double max_pi;
  double alpha;
  double beta;
};

/// Requires the map to lie in class G (checked against the closed-form alpha
/// bounds). Throws Error(EmptyPi) if no root survives the filter.
PiSet compute_pi(const PollutionMap& map, int subdivisions = kCertifySubdivisions);

/// beta = 1 period-two points (alpha + 1 -/+ sqrt(alpha^2 - 2 alpha - 3)) / (2 alpha);
/// empty when the discriminant is negative. Requires alpha > 0.
std::optional<std::pair<double, double>> period_two_closed_form_beta1(double alpha);

enum class CurveKind { Fixed, PeriodTwo, MLine };

std::string_view to_string(CurveKind kind) noexcept;

struct CurveSample {
  double beta;
  double alpha;
  double k;
  CurveKind kind;

  friend bool operator==(const CurveSample&, const CurveSample&) = default;
};

/// Default alpha window for the fixed/period-two curves: the class G interval
/// with its upper end extended by 10%.
std::pair<double, double> default_curve_alpha_range(double beta);

/// For n alphas spaced uniformly over [alpha_lo, alpha_hi]: one m_line row, the
/// interior fixed point z (alpha > 1), and every period-two root of f^2(k) = k in
/// (0, 1] whose orbit stays in [0, 1]. Rows are ordered by alpha, then m_line,
/// fixed, period2 by ascending k.
std::vector<CurveSample> fixed_curve_samples(double beta, double alpha_lo, double alpha_hi, int n,
                                             int subdivisions = kCurveSubdivisions);

/// Header `beta,alpha,k,kind`, 17 significant digits.
void write_curves_csv(std::ostream& out, std::span<const CurveSample> rows);

}  // namespace chaoscert
