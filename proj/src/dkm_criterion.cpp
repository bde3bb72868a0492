#include "chaoscert/dkm_criterion.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "chaoscert/class_g.hpp"
#include "chaoscert/error.hpp"
#include "chaoscert/kernels.hpp"
#include "chaoscert/serialize.hpp"

namespace chaoscert {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool same(double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); }

}  // namespace

std::string_view to_string(ChaosStatus s) noexcept {
  switch (s) {
    case ChaosStatus::NotInG: return "NotInG";
    case ChaosStatus::NoOddCycleNoTurbulence: return "NoOddCycleNoTurbulence";
    case ChaosStatus::TurbulentOnly: return "TurbulentOnly";
    case ChaosStatus::OddCycleAndTurbulent: return "OddCycleAndTurbulent";
  }
  return "Unknown";
}

ChaosStatus parse_chaos_status(std::string_view name) {
  for (auto s : {ChaosStatus::NotInG, ChaosStatus::NoOddCycleNoTurbulence, ChaosStatus::TurbulentOnly,
                 ChaosStatus::OddCycleAndTurbulent})
    if (to_string(s) == name) return s;
  throw Error(ErrorCode::InvalidArgument, "unknown chaos status '" + std::string(name) + "'");
}

bool same_verdict(const ChaosVerdict& a, const ChaosVerdict& b) noexcept {
  return a.status == b.status && same(a.alpha, b.alpha) && same(a.beta, b.beta) && same(a.m, b.m) &&
         same(a.f2m, b.f2m) && same(a.f3m, b.f3m) && same(a.min_pi, b.min_pi) && same(a.max_pi, b.max_pi) &&
         same(a.margins.peak_return, b.margins.peak_return) && same(a.margins.odd_cycle, b.margins.odd_cycle) &&
         same(a.margins.turbulence, b.margins.turbulence);
}

F2mCondition f2m_condition(const PollutionMap& map) {
  const double m = map.critical_point().m;
  const std::array<double, 1> alpha{map.alpha()};
  std::array<double, 1> lhs{}, f2m{}, f3m{};
  const auto& kt = kernels::active();
  kt.peak_return_lhs(map.beta(), alpha, lhs);
  kt.peak_iterates(map.beta(), alpha, f2m, f3m);

  const bool closed = lhs[0] > 0.0;
  const bool direct = f2m[0] < m;
  if (closed != direct && std::fabs(lhs[0]) > kFormulationSlack && std::fabs(m - f2m[0]) > kFormulationSlack &&
      !(std::isnan(lhs[0]) && std::isnan(f2m[0])))
    throw Error(ErrorCode::InconsistentFormulation,
                "closed form " + format_double(lhs[0]) + " and f^2(m)-m " + format_double(f2m[0] - m) +
                    " disagree at alpha=" + format_double(map.alpha()) + ", beta=" + format_double(map.beta()));
  return {closed, lhs[0], f2m[0]};
}

ChaosVerdict classify(const PollutionMap& map, const ClassifyOptions& options) {
  const double m = map.critical_point().m;
  const double f2m = map.iterate_raw(m, 2);
  const double f3m = map.iterate_raw(m, 3);

  ChaosVerdict v{ChaosStatus::NotInG, map.alpha(), map.beta(), m, f2m, f3m, kNaN, kNaN, {m - f2m, kNaN, kNaN}};
  if (!std::isfinite(f2m)) v.f2m = v.margins.peak_return = kNaN;
  if (!std::isfinite(f3m)) v.f3m = kNaN;

  if (!check_membership(map, options.membership_grid).in_class) return v;

  const auto peak = f2m_condition(map);
  if (!peak.satisfied) {
    v.status = ChaosStatus::NoOddCycleNoTurbulence;
    return v;
  }

  PiSet pi;
  try {
    pi = compute_pi(map, options.pi_subdivisions);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::EmptyPi) throw Error(ErrorCode::Inconclusive, e.what());
    throw;
  }
  v.min_pi = pi.min_pi;
  v.max_pi = pi.max_pi;
  v.margins.odd_cycle = pi.min_pi - f3m;
  v.margins.turbulence = pi.max_pi - f3m;

  const bool odd = v.margins.odd_cycle > kVerdictEqualityBand;
  const bool turbulent = v.margins.turbulence >= -kVerdictEqualityBand;
  if (odd && turbulent)
    v.status = ChaosStatus::OddCycleAndTurbulent;
  else if (turbulent)
    v.status = ChaosStatus::TurbulentOnly;
  else
    v.status = ChaosStatus::NoOddCycleNoTurbulence;
  return v;
}

std::pair<ChaosVerdict, ChaosVerdict> verdict_boundary_probe(double beta, double alpha_star, double epsilon,
                                                             const ClassifyOptions& options) {
  if (!(epsilon > 0.0)) throw Error(ErrorCode::InvalidArgument, "epsilon must be > 0");
  return {classify(PollutionMap(alpha_star - epsilon, beta), options),
          classify(PollutionMap(alpha_star + epsilon, beta), options)};
}

}  // namespace chaoscert
