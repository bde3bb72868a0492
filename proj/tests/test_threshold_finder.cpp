#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "chaoscert/error.hpp"
#include "chaoscert/parallel.hpp"
#include "chaoscert/threshold_finder.hpp"
#include "support/oracles.hpp"

using namespace chaoscert;

TEST_CASE("golden thresholds") {
  struct Row {
    double beta, lower, upper, f2m, chaos;
  };
  for (const Row r : {Row{1, 2.0, 4.0, 3.236, 3.679}, Row{2, 2.250, 6.750, 4.500, 5.574},
                      Row{3, 2.370, 9.481, 5.347, 7.027}, Row{10, 2.594, 28.531, 7.626, 11.795}}) {
    const auto rep = compute_thresholds(r.beta);
    CHECK(std::fabs(rep.g_lower - r.lower) <= 1e-3);
    CHECK(std::fabs(rep.g_upper - r.upper) <= 1e-3);
    CHECK(std::fabs(rep.f2m_threshold - r.f2m) <= 1e-3);
    CHECK(std::fabs(rep.chaos_threshold - r.chaos) <= 1e-3);
    CHECK_FALSE(rep.f2m.multiple_crossings);
    CHECK_FALSE(rep.chaos.multiple_crossings);
  }
}

TEST_CASE("beta = 1 peak-return threshold is 1 + sqrt 5") {
  const auto s = solve_f2m_threshold(1.0, 1e-12);
  CHECK(std::fabs(s.alpha - (1.0 + std::sqrt(5.0))) <= 1e-9);
}

TEST_CASE("beta = 2 peak-return threshold is 4.5") {
  CHECK(std::fabs(solve_f2m_threshold(2.0).alpha - 4.5) <= 1e-9);
}

TEST_CASE("residuals vanish at the roots under an independent evaluation") {
  for (double beta : {1.0, 2.0, 3.0, 10.0}) {
    const auto rep = compute_thresholds(beta);
    const double m = 1.0 / (1.0 + beta);
    const double a = rep.chaos_threshold;
    const double z = 1.0 - std::pow(a, -1.0 / beta);
    CHECK(std::fabs(m - oracle::iterate(rep.f2m_threshold, beta, m, 2)) <= 1e-9);
    CHECK(std::fabs(z - oracle::iterate(a, beta, m, 3)) <= 1e-9);
    CHECK(rep.g_lower < rep.f2m_threshold);
    CHECK(rep.f2m_threshold < rep.chaos_threshold);
    CHECK(rep.chaos_threshold <= rep.g_upper);
  }
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(compute_thresholds(0.0), Error);
  CHECK_THROWS_AS(compute_thresholds(2.0, 1e-14), Error);
  CHECK_THROWS_AS(threshold_sweep(0.1, 2.0, 4), Error);
  CHECK_THROWS_AS(threshold_sweep(1.0, 2.0, 1), Error);
}

TEST_CASE("sweep is monotone in g_upper and independent of worker count") {
  set_worker_count(1);
  const auto one = threshold_sweep(1.0, 10.0, 19);
  set_worker_count(4);
  const auto four = threshold_sweep(1.0, 10.0, 19);
  set_worker_count(0);
  REQUIRE(one.size() == 19);
  for (std::size_t i = 0; i < one.size(); ++i) {
    REQUIRE(one[i].report.has_value());
    CHECK(one[i].report->chaos_threshold == four[i].report->chaos_threshold);
    CHECK(one[i].report->f2m_threshold == four[i].report->f2m_threshold);
    const double beta = one[i].beta;
    CHECK(one[i].report->g_upper ==
          doctest::Approx(std::pow(beta + 1.0, beta + 1.0) / std::pow(beta, beta)).epsilon(1e-13));
    if (i > 0) CHECK(one[i].report->g_upper > one[i - 1].report->g_upper);
  }
  std::ostringstream a, b;
  write_thresholds_csv(a, one);
  write_thresholds_csv(b, four);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("beta,g_lower,g_upper,f2m_threshold,chaos_threshold\n", 0) == 0);
}
