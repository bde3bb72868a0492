#include "chaoscert/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "chaoscert/error.hpp"

namespace chaoscert {

namespace {

nlohmann::json number_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

double number_from(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorCode::InvalidArgument, std::string("verdict JSON lacks '") + key + "'");
  const auto& v = j.at(key);
  if (v.is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (!v.is_number()) throw Error(ErrorCode::InvalidArgument, std::string("verdict field '") + key + "' is not a number");
  return v.get<double>();
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_display(double v) {
  if (!std::isfinite(v)) return format_double(v);
  // glibc rounds the exact binary value, so representable ties go to even.
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

nlohmann::json to_json(const ChaosVerdict& v) {
  return {
      {"alpha", v.alpha},
      {"beta", v.beta},
      {"status", std::string(to_string(v.status))},
      {"m", number_or_null(v.m)},
      {"f2m", number_or_null(v.f2m)},
      {"f3m", number_or_null(v.f3m)},
      {"min_pi", number_or_null(v.min_pi)},
      {"max_pi", number_or_null(v.max_pi)},
      {"margins",
       {{"peak_return", number_or_null(v.margins.peak_return)},
        {"odd_cycle", number_or_null(v.margins.odd_cycle)},
        {"turbulence", number_or_null(v.margins.turbulence)}}},
  };
}

ChaosVerdict verdict_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "verdict JSON must be an object");
  if (!j.contains("status") || !j.at("status").is_string())
    throw Error(ErrorCode::InvalidArgument, "verdict JSON lacks a string 'status'");
  if (!j.contains("margins") || !j.at("margins").is_object())
    throw Error(ErrorCode::InvalidArgument, "verdict JSON lacks 'margins'");
  const auto& mg = j.at("margins");
  ChaosVerdict v{};
  v.status = parse_chaos_status(j.at("status").get<std::string>());
  v.alpha = number_from(j, "alpha");
  v.beta = number_from(j, "beta");
  v.m = number_from(j, "m");
  v.f2m = number_from(j, "f2m");
  v.f3m = number_from(j, "f3m");
  v.min_pi = number_from(j, "min_pi");
  v.max_pi = number_from(j, "max_pi");
  v.margins = {number_from(mg, "peak_return"), number_from(mg, "odd_cycle"), number_from(mg, "turbulence")};
  return v;
}

nlohmann::json to_json(const ThresholdReport& r) {
  auto solve = [](const ThresholdSolve& s) {
    return nlohmann::json{{"alpha", number_or_null(s.alpha)},
                          {"residual", number_or_null(s.residual)},
                          {"iterations", s.iterations},
                          {"crossings", s.crossings},
                          {"multiple_crossings", s.multiple_crossings}};
  };
  return {
      {"beta", r.beta},
      {"g_lower", r.g_lower},
      {"g_upper", r.g_upper},
      {"f2m_threshold", number_or_null(r.f2m_threshold)},
      {"chaos_threshold", number_or_null(r.chaos_threshold)},
      {"tol", r.tol},
      {"f2m", solve(r.f2m)},
      {"chaos", solve(r.chaos)},
  };
}

nlohmann::json to_json(const OrbitFinding& f) {
  return {{"period", f.period},
          {"representative", f.representative},
          {"residual", f.residual},
          {"method", std::string(to_string(f.method))}};
}

nlohmann::json to_json(const EntropyEstimate& e) {
  return {{"value", e.value}, {"levels", e.levels}, {"laps_per_level", e.laps_per_level},
          {"sampled_laps", e.sampled_laps}};
}

void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& write) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "' for writing");
  write(out);
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "write to '" + path.string() + "' failed");
}

}  // namespace chaoscert
