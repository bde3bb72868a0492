// chaoscert: certify odd-period cycles and turbulence of the pollution map
// f(k) = alpha k (1 - k)^beta, and export threshold and figure data.
//
// Exit status: certify 0 chaotic, 1 not chaotic, 2 outside class G;
// 3 computational failure, 64 usage, 65 invalid input, 74 I/O.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "chaoscert/dkm_criterion.hpp"
#include "chaoscert/error.hpp"
#include "chaoscert/kernels.hpp"
#include "chaoscert/oracle.hpp"
#include "chaoscert/parallel.hpp"
#include "chaoscert/region_scan.hpp"
#include "chaoscert/serialize.hpp"
#include "chaoscert/threshold_finder.hpp"
#include "config.hpp"

namespace {

using chaoscert::Error;
using chaoscert::ErrorCode;
using cli::RunConfig;

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return cli::kExitInvalidInput;
    case ErrorCode::Io: return cli::kExitIo;
    default: return cli::kExitFailure;
  }
}

void apply_runtime(const RunConfig& c) {
  chaoscert::set_worker_count(c.threads);
  const auto isa = chaoscert::kernels::parse_isa(c.kernel);
  if (c.kernel != "auto") {
    if (!isa) throw Error(ErrorCode::InvalidArgument, "kernel must be scalar, avx2 or auto");
    chaoscert::kernels::set_isa(*isa);
  }
}

int cmd_certify(const RunConfig& c) {
  cli::require_finite_positive(c.alpha, "alpha");
  cli::require_finite_positive(c.beta, "beta");
  cli::require_at_least(c.membership_grid, 100, "membership-grid");
  cli::require_at_least(c.pi_subdivisions, 1000, "pi-subdivisions");
  const auto v = chaoscert::classify(chaoscert::PollutionMap(c.alpha, c.beta),
                                     {.membership_grid = c.membership_grid, .pi_subdivisions = c.pi_subdivisions});
  std::cout << chaoscert::to_json(v).dump(2) << '\n';
  switch (v.status) {
    case chaoscert::ChaosStatus::OddCycleAndTurbulent:
    case chaoscert::ChaosStatus::TurbulentOnly: return 0;
    case chaoscert::ChaosStatus::NoOddCycleNoTurbulence: return 1;
    case chaoscert::ChaosStatus::NotInG: return 2;
  }
  return cli::kExitFailure;
}

int cmd_threshold(const RunConfig& c) {
  cli::require_finite_positive(c.beta, "beta");
  const auto r = chaoscert::compute_thresholds(c.beta, c.tol);
  if (c.threshold_format == "json") {
    std::cout << chaoscert::to_json(r).dump(2) << '\n';
  } else if (c.threshold_format == "csv") {
    const chaoscert::SweepRow row{c.beta, r, {}};
    chaoscert::write_thresholds_csv(std::cout, {&row, 1});
  } else {
    std::printf("%-8s %-8s %-8s %-14s %s\n", "beta", "g_lower", "g_upper", "f2m_threshold", "chaos_threshold");
    std::printf("%-8s %-8s %-8s %-14s %s\n", chaoscert::format_display(r.beta).c_str(),
                chaoscert::format_display(r.g_lower).c_str(), chaoscert::format_display(r.g_upper).c_str(),
                chaoscert::format_display(r.f2m_threshold).c_str(),
                chaoscert::format_display(r.chaos_threshold).c_str());
    if (r.f2m.multiple_crossings || r.chaos.multiple_crossings)
      std::fprintf(stderr, "warning: several crossings found; the smallest alpha is reported\n");
  }
  return 0;
}

int cmd_sweep(const RunConfig& c) {
  const auto range = cli::parse_range(c.sweep_beta_range, "beta-range");
  if (range.lo < 0.5) throw Error(ErrorCode::InvalidArgument, "beta-range must start at >= 0.5");
  cli::require_at_least(c.sweep_n, 2, "n");
  const auto rows = chaoscert::threshold_sweep(range.lo, range.hi, c.sweep_n, c.tol);
  chaoscert::write_file(c.sweep_out, [&](std::ostream& out) {
    if (c.sweep_format == "json") {
      auto j = nlohmann::json::array();
      for (const auto& row : rows) {
        if (row.report) j.push_back(chaoscert::to_json(*row.report));
        else j.push_back({{"beta", row.beta}, {"error", row.error}});
      }
      out << j.dump(2) << '\n';
    } else {
      chaoscert::write_thresholds_csv(out, rows);
    }
  });
  for (const auto& row : rows)
    if (!row.report) std::fprintf(stderr, "warning: beta=%s: %s\n", chaoscert::format_double(row.beta).c_str(), row.error.c_str());
  std::printf("%zu rows -> %s\n", rows.size(), c.sweep_out.c_str());
  return 0;
}

int cmd_scan(const RunConfig& c) {
  chaoscert::FigureParams p;
  p.alpha = cli::parse_range(c.scan_alpha_range, "alpha-range");
  p.beta = cli::parse_range(c.scan_beta_range, "beta-range");
  if (p.beta.lo < 0.0) throw Error(ErrorCode::InvalidArgument, "beta-range must start at >= 0");
  p.nx = c.nx;
  p.ny = c.ny;
  cli::require_at_least(c.nx, 16, "nx");
  cli::require_at_least(c.ny, 16, "ny");
  const auto rows = chaoscert::export_figure_data(chaoscert::FigureKind::Region, p, c.scan_out);
  std::printf("%zu rows -> %s\n", rows, c.scan_out.c_str());
  return 0;
}

int cmd_curves(const RunConfig& c) {
  cli::require_finite_positive(c.curve_beta, "beta");
  chaoscert::FigureParams p;
  p.curve_beta = c.curve_beta;
  if (!c.curve_alpha_range.empty()) {
    p.curve_alpha = cli::parse_range(c.curve_alpha_range, "alpha-range");
    cli::require_finite_positive(p.curve_alpha->lo, "alpha-range start");
  }
  cli::require_at_least(c.curve_n, 2, "n");
  cli::require_at_least(c.curve_subdivisions, 1000, "subdivisions");
  p.curve_n = c.curve_n;
  p.curve_subdivisions = c.curve_subdivisions;
  const auto rows = chaoscert::export_figure_data(chaoscert::FigureKind::Curves, p, c.curve_out);
  std::printf("%zu rows -> %s\n", rows, c.curve_out.c_str());
  return 0;
}

int cmd_oracle(const RunConfig& c) {
  cli::require_finite_positive(c.alpha, "alpha");
  cli::require_finite_positive(c.beta, "beta");
  const chaoscert::PollutionMap map(c.alpha, c.beta);
  const auto orbit = chaoscert::find_odd_cycle(map, c.max_period, c.orbit_scan);
  const auto entropy = chaoscert::lap_entropy(map, c.entropy_levels, c.entropy_scan);
  nlohmann::json j{{"alpha", c.alpha},
                   {"beta", c.beta},
                   {"odd_cycle", orbit ? chaoscert::to_json(*orbit) : nlohmann::json(nullptr)},
                   {"entropy", chaoscert::to_json(entropy)}};
  std::cout << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig c;
  CLI::App app{"Odd-cycle and turbulence certification for the pollution growth map"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file with defaults; flags take precedence")
      ->envname("CHAOSCERT_CONFIG");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.add_option("--threads", c.threads, "worker cap, 0 = hardware concurrency");
  app.add_option("--kernel", c.kernel, "scalar, avx2 or auto");

  auto* certify = app.add_subcommand("certify", "classify one (alpha, beta) and print the verdict JSON");
  certify->add_option("--alpha", c.alpha)->required();
  certify->add_option("--beta", c.beta)->required();
  certify->add_option("--membership-grid", c.membership_grid);
  certify->add_option("--pi-subdivisions", c.pi_subdivisions);

  auto* threshold = app.add_subcommand("threshold", "class G bounds and critical alphas for one beta");
  threshold->add_option("--beta", c.beta)->required();
  threshold->add_option("--tol", c.tol);
  threshold->add_option("--format", c.threshold_format)->check(CLI::IsMember({"text", "csv", "json"}));

  auto* sweep = app.add_subcommand("sweep", "thresholds over a beta grid");
  sweep->add_option("--beta-range", c.sweep_beta_range, "lo:hi");
  sweep->add_option("--n", c.sweep_n);
  sweep->add_option("--tol", c.tol);
  sweep->add_option("--format", c.sweep_format)->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--out", c.sweep_out);

  auto* scan = app.add_subcommand("scan", "region labels over the (alpha, beta) plane");
  scan->add_option("--alpha-range", c.scan_alpha_range, "lo:hi, sampled as (lo, hi]");
  scan->add_option("--beta-range", c.scan_beta_range, "lo:hi, sampled as (lo, hi]");
  scan->add_option("--nx", c.nx);
  scan->add_option("--ny", c.ny);
  scan->add_option("--out", c.scan_out);

  auto* curves = app.add_subcommand("curves", "fixed-point, period-two and peak curves for one beta");
  curves->add_option("--beta", c.curve_beta);
  curves->add_option("--alpha-range", c.curve_alpha_range, "lo:hi");
  curves->add_option("--n", c.curve_n);
  curves->add_option("--subdivisions", c.curve_subdivisions);
  curves->add_option("--out", c.curve_out);

  auto* oracle = app.add_subcommand("oracle", "direct odd-cycle search and lap entropy");
  oracle->add_option("--alpha", c.alpha)->required();
  oracle->add_option("--beta", c.beta)->required();
  oracle->add_option("--max-period", c.max_period);
  oracle->add_option("--orbit-scan", c.orbit_scan);
  oracle->add_option("--levels", c.entropy_levels);
  oracle->add_option("--entropy-scan", c.entropy_scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::FileError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return cli::kExitIo;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitUsage;
  }

  try {
    apply_runtime(c);
    if (*certify) return cmd_certify(c);
    if (*threshold) return cmd_threshold(c);
    if (*sweep) return cmd_sweep(c);
    if (*scan) return cmd_scan(c);
    if (*curves) return cmd_curves(c);
    if (*oracle) return cmd_oracle(c);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return cli::kExitFailure;
  }
  return cli::kExitUsage;
}
