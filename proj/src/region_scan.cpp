#include "chaoscert/region_scan.hpp"

#include "chaoscert/class_g.hpp"
#include "chaoscert/error.hpp"
#include "chaoscert/kernels.hpp"
#include "chaoscert/parallel.hpp"
#include "chaoscert/period_solver.hpp"
#include "chaoscert/serialize.hpp"

namespace chaoscert {

std::string_view to_string(RegionLabel label) noexcept {
  switch (label) {
    case RegionLabel::A: return "a";
    case RegionLabel::B: return "b";
    case RegionLabel::C: return "c";
    case RegionLabel::D: return "d";
    case RegionLabel::None: return "none";
  }
  return "none";
}

RegionLabel label_for(double alpha, double lower, double upper, bool in_g, bool f2m_ok) noexcept {
  if (in_g) return f2m_ok ? RegionLabel::C : RegionLabel::B;
  if (!f2m_ok) return RegionLabel::None;
  if (alpha <= lower) return RegionLabel::A;
  if (alpha > upper) return RegionLabel::D;
  return RegionLabel::None;
}

RegionGrid scan(Range alpha, Range beta, int nx, int ny) {
  if (nx < 16 || ny < 16) throw Error(ErrorCode::InvalidArgument, "region grid needs nx, ny >= 16");
  if (!(alpha.hi > alpha.lo) || !(beta.hi > beta.lo))
    throw Error(ErrorCode::InvalidArgument, "region windows must satisfy lo < hi");
  if (!(beta.lo >= 0.0) || !(alpha.lo >= 0.0))
    throw Error(ErrorCode::InvalidArgument, "region windows must be non-negative");

  RegionGrid grid{nx, ny, std::vector<RegionCell>(static_cast<std::size_t>(nx) * ny)};
  std::vector<double> alphas(static_cast<std::size_t>(nx));
  for (int i = 0; i < nx; ++i)
    alphas[i] = i + 1 == nx ? alpha.hi : alpha.lo + (alpha.hi - alpha.lo) * (i + 1) / nx;

  parallel_for(static_cast<std::size_t>(ny), [&](std::size_t b, std::size_t e) {
    std::vector<double> lhs(alphas.size());
    const auto& kt = kernels::active();
    for (std::size_t iy = b; iy < e; ++iy) {
      const double bet = iy + 1 == static_cast<std::size_t>(ny)
                             ? beta.hi
                             : beta.lo + (beta.hi - beta.lo) * static_cast<double>(iy + 1) / ny;
      const auto bounds = alpha_bounds(bet);
      kt.peak_return_lhs(bet, alphas, lhs);
      for (std::size_t ix = 0; ix < alphas.size(); ++ix) {
        const bool in_g = bounds.contains(alphas[ix]);
        const bool ok = lhs[ix] > 0.0;
        grid.cells[iy * alphas.size() + ix] = {alphas[ix], bet, in_g, ok,
                                               label_for(alphas[ix], bounds.lower, bounds.upper, in_g, ok)};
      }
    }
  });
  return grid;
}

void write_region_csv(std::ostream& out, const RegionGrid& grid) {
  out << "alpha,beta,label\n";
  for (const auto& c : grid.cells)
    out << format_double(c.alpha) << ',' << format_double(c.beta) << ',' << to_string(c.label) << '\n';
}

std::size_t export_figure_data(FigureKind kind, const FigureParams& params, const std::filesystem::path& path) {
  if (kind == FigureKind::Region) {
    const auto grid = scan(params.alpha, params.beta, params.nx, params.ny);
    write_file(path, [&](std::ostream& out) { write_region_csv(out, grid); });
    return grid.cells.size();
  }
  const auto window = params.curve_alpha.value_or([&] {
    const auto [lo, hi] = default_curve_alpha_range(params.curve_beta);
    return Range{lo, hi};
  }());
  const auto rows =
      fixed_curve_samples(params.curve_beta, window.lo, window.hi, params.curve_n, params.curve_subdivisions);
  write_file(path, [&](std::ostream& out) { write_curves_csv(out, rows); });
  return rows.size();
}

}  // namespace chaoscert
