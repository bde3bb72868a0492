#pragma once

#include <filesystem>
#include <functional>
#include <ostream>
#include <string>

#include "json.hpp"

#include "chaoscert/dkm_criterion.hpp"
#include "chaoscert/oracle.hpp"
#include "chaoscert/threshold_finder.hpp"

namespace chaoscert {

/// Shortest round-trip text is not needed; data files use a fixed 17 significant
/// digits so identical runs are byte-identical. NaN prints as `nan`.
std::string format_double(double v);

/// Display precision: 3 decimals, ties to even.
std::string format_display(double v);

/// {alpha, beta, status, f2m, f3m, min_pi, max_pi, margins{peak_return, odd_cycle,
/// turbulence}}; undefined values are null.
nlohmann::json to_json(const ChaosVerdict& v);
/// Throws Error(InvalidArgument) on schema mismatch.
ChaosVerdict verdict_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ThresholdReport& r);
nlohmann::json to_json(const OrbitFinding& f);
nlohmann::json to_json(const EntropyEstimate& e);

/// Opens `path`, lets `write` fill it, and reports failures as Error(Io) naming the path.
void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& write);

}  // namespace chaoscert
