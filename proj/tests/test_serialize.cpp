#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "chaoscert/error.hpp"
#include "chaoscert/serialize.hpp"
#include "support/oracles.hpp"

using namespace chaoscert;

TEST_CASE("number formatting") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(NAN) == "nan");
  CHECK(format_double(4.0) == "4");
  CHECK(format_display(3.2360679) == "3.236");
  CHECK(format_display(5.5738194) == "5.574");
  CHECK(format_display(0.0625) == "0.062");
  CHECK(format_display(NAN) == "nan");
}

TEST_CASE("verdict JSON round-trip") {
  oracle::Rng rng(8);
  for (int i = 0; i < 40; ++i) {
    const double beta = rng.uniform(0.5, 12.0);
    const double alpha = rng.uniform(0.5, 35.0);
    const auto v = classify(PollutionMap(alpha, beta));
    const auto j = to_json(v);
    CHECK(same_verdict(verdict_from_json(nlohmann::json::parse(j.dump())), v));
  }
  const auto out = to_json(classify(PollutionMap(4.5, 1.0)));
  CHECK(out["status"] == "NotInG");
  CHECK(out["min_pi"].is_null());
}

TEST_CASE("schema mismatch is rejected") {
  auto j = to_json(classify(PollutionMap(3.9, 1.0)));
  j.erase("f3m");
  CHECK_THROWS_AS(verdict_from_json(j), Error);
  auto k = to_json(classify(PollutionMap(3.9, 1.0)));
  k["status"] = "Chaos";
  CHECK_THROWS_AS(verdict_from_json(k), Error);
}

TEST_CASE("report JSON") {
  const auto j = to_json(compute_thresholds(2.0));
  CHECK(j["beta"] == 2.0);
  CHECK(j["g_upper"] == 6.75);
  CHECK(std::fabs(j["chaos_threshold"].get<double>() - 5.574) <= 1e-3);
  const auto e = to_json(lap_entropy(PollutionMap(4.0, 1.0), 8));
  CHECK(e["levels"] == 8);
  CHECK(e["laps_per_level"].size() == 8);
}
