#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

namespace chaoscert {

/// Figure-style partition of the (alpha, beta) plane:
///   c  in class G and f^2(m) < m
///   b  in class G only
///   a  f^2(m) < m with alpha at or below the class G strip
///   d  f^2(m) < m with alpha above the strip
enum class RegionLabel { A, B, C, D, None };

std::string_view to_string(RegionLabel label) noexcept;

struct RegionCell {
  double alpha;
  double beta;
  bool in_g;
  bool f2m_ok;
  RegionLabel label;

  friend bool operator==(const RegionCell&, const RegionCell&) = default;
};

RegionLabel label_for(double alpha, double lower, double upper, bool in_g, bool f2m_ok) noexcept;

struct RegionGrid {
  int nx;  // alpha samples per row
  int ny;  // beta rows
  std::vector<RegionCell> cells;  // row-major, beta outer

  const RegionCell& at(int ix, int iy) const { return cells[static_cast<std::size_t>(iy) * nx + ix]; }
};

struct Range {
  double lo;
  double hi;
};

inline constexpr Range kDefaultAlphaWindow{0.0, 30.0};
inline constexpr Range kDefaultBetaWindow{0.0, 12.0};
inline constexpr int kDefaultNx = 600;
inline constexpr int kDefaultNy = 480;

/// Samples the half-open windows (lo, hi]: alpha_i = lo + (hi-lo)(i+1)/nx, same
/// for beta. Class membership uses the closed-form bounds; f2m_ok uses the
/// closed-form peak-return expression. Requires nx, ny >= 16 and beta > 0 on the window.
RegionGrid scan(Range alpha, Range beta, int nx, int ny);

/// Header `alpha,beta,label`, one row per cell in grid order.
void write_region_csv(std::ostream& out, const RegionGrid& grid);

enum class FigureKind { Region, Curves };

struct FigureParams {
  // region
  Range alpha = kDefaultAlphaWindow;
  Range beta = kDefaultBetaWindow;
  int nx = kDefaultNx;
  int ny = kDefaultNy;
  // curves
  double curve_beta = 2.0;
  std::optional<Range> curve_alpha;  // default_curve_alpha_range(curve_beta) when empty
  int curve_n = 200;
  int curve_subdivisions = 1000;
};

/// Writes the region CSV or the fixed/period-two curve CSV to `path`; returns
/// the number of data rows. I/O failures throw Error(Io) with the path.
std::size_t export_figure_data(FigureKind kind, const FigureParams& params, const std::filesystem::path& path);

}  // namespace chaoscert
