#include "config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>

#include "chaoscert/error.hpp"

namespace cli {

namespace {

bool parse_number(const std::string& s, double& out) {
  if (s.empty()) return false;
  errno = 0;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return errno == 0 && end == s.c_str() + s.size() && std::isfinite(out);
}

}  // namespace

chaoscert::Range parse_range(const std::string& text, const char* what) {
  const auto colon = text.find(':');
  double lo = 0.0, hi = 0.0;
  if (colon == std::string::npos || !parse_number(text.substr(0, colon), lo) ||
      !parse_number(text.substr(colon + 1), hi) || !(lo < hi))
    throw chaoscert::Error(chaoscert::ErrorCode::InvalidArgument,
                           std::string(what) + " must be lo:hi with lo < hi, got '" + text + "'");
  return {lo, hi};
}

void require_finite_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw chaoscert::Error(chaoscert::ErrorCode::InvalidArgument, std::string(what) + " must be finite and > 0");
}

void require_at_least(long v, long min, const char* what) {
  if (v < min)
    throw chaoscert::Error(chaoscert::ErrorCode::InvalidArgument,
                           std::string(what) + " must be >= " + std::to_string(min));
}

}  // namespace cli
