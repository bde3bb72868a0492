#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <vector>

#include "chaoscert/kernels.hpp"
#include "support/oracles.hpp"

using namespace chaoscert;

namespace {

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

std::vector<double> random_unit(oracle::Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.uniform(0.0, 1.0);
  return v;
}

}  // namespace

TEST_CASE("exp and log approximations stay within a few ulp of libm") {
  oracle::Rng rng(7);
  double worst_log = 0.0, worst_exp = 0.0;
  for (int i = 0; i < 200000; ++i) {
    const double x = std::exp(rng.uniform(-700.0, 700.0));
    worst_log = std::max(worst_log, std::fabs(kernels::log_approx(x) - std::log(x)) /
                                        std::max(std::fabs(std::log(x)), 1e-300));
    const double y = rng.uniform(-700.0, 700.0);
    worst_exp = std::max(worst_exp, std::fabs(kernels::exp_approx(y) - std::exp(y)) / std::exp(y));
  }
  CHECK(worst_log < 4e-16);
  CHECK(worst_exp < 4e-16);
  CHECK(kernels::exp_approx(-800.0) == 0.0);
  CHECK(std::isinf(kernels::exp_approx(800.0)));
  CHECK(std::isnan(kernels::exp_approx(NAN)));
  CHECK(kernels::log_approx(1.0) == 0.0);
}

TEST_CASE("pollution_pow special cases") {
  CHECK(kernels::pollution_pow(0.0, 2.5) == 0.0);
  CHECK(kernels::pollution_pow(0.0, 3.0) == 0.0);
  CHECK(kernels::pollution_pow(0.0, 0.0) == 1.0);
  CHECK(kernels::pollution_pow(0.5, 1.0) == 0.5);
  CHECK(kernels::pollution_pow(0.5, 2.0) == 0.25);
  CHECK(kernels::pollution_pow(-0.5, 3.0) == -0.125);
  CHECK(kernels::pollution_pow(-0.5, 2.0) == 0.25);
  CHECK(std::isnan(kernels::pollution_pow(-0.5, 2.5)));
  CHECK(std::isnan(kernels::pollution_pow(NAN, 2.5)));
  CHECK(kernels::pollution_pow(0.3, 2.5) == doctest::Approx(std::pow(0.3, 2.5)).epsilon(1e-15));
  CHECK(kernels::pollution_pow(0.3, 2048.0) == doctest::Approx(std::pow(0.3, 2048.0)).epsilon(1e-12));
}

TEST_CASE("map_value agrees with std::pow reference") {
  oracle::Rng rng(11);
  for (int i = 0; i < 10000; ++i) {
    const double alpha = rng.uniform(0.1, 30.0), beta = rng.uniform(0.0, 12.0), k = rng.uniform(0.0, 1.0);
    const double ref = oracle::f(alpha, beta, k);
    // exp(beta log x) carries a relative error of order |beta log x| ulps.
    const double tol = 4e-16 * (2.0 + std::fabs(beta * std::log1p(-k))) * std::fabs(ref);
    CHECK(std::fabs(kernels::map_value(alpha, beta, k) - ref) <= tol);
  }
}

TEST_CASE("AVX2 kernels are bit-identical to the scalar reference") {
  if (!kernels::isa_supported(kernels::Isa::Avx2)) {
    MESSAGE("AVX2 not available; equivalence not exercised");
    return;
  }
  const auto& ref = kernels::table(kernels::Isa::Scalar);
  const auto& vec = kernels::table(kernels::Isa::Avx2);
  oracle::Rng rng(3);

  // Odd lengths exercise the scalar tail of the vector loop.
  for (double beta : {0.0, 0.5, 1.0, 2.0, 3.0, 2.75, 10.0, 11.3}) {
    for (std::size_t n : {1u, 3u, 4u, 5u, 17u, 1001u}) {
      const auto k = random_unit(rng, n);
      std::vector<double> a(n), b(n);
      const double alpha = rng.uniform(0.5, 28.0);

      ref.map_values(alpha, beta, k, a);
      vec.map_values(alpha, beta, k, b);
      for (std::size_t i = 0; i < n; ++i) REQUIRE(bit_equal(a[i], b[i]));

      for (int p : {1, 2, 3, 7}) {
        ref.iterate_residual(alpha, beta, p, k, a);
        vec.iterate_residual(alpha, beta, p, k, b);
        for (std::size_t i = 0; i < n; ++i) REQUIRE(bit_equal(a[i], b[i]));
      }

      std::vector<double> alphas(n);
      for (auto& x : alphas) x = rng.uniform(0.01, 30.0);
      std::vector<double> a3(n), b3(n);
      if (beta > 0.0) {
        ref.peak_iterates(beta, alphas, a, a3);
        vec.peak_iterates(beta, alphas, b, b3);
        for (std::size_t i = 0; i < n; ++i) REQUIRE((bit_equal(a[i], b[i]) && bit_equal(a3[i], b3[i])));
        ref.peak_return_lhs(beta, alphas, a);
        vec.peak_return_lhs(beta, alphas, b);
        for (std::size_t i = 0; i < n; ++i) REQUIRE(bit_equal(a[i], b[i]));

        auto oa = k, ob = k;
        std::vector<double> sa(n, 1.0), sb(n, 1.0);
        for (int level = 0; level < 6; ++level) {
          ref.lap_sign_step(alpha, beta, oa, sa);
          vec.lap_sign_step(alpha, beta, ob, sb);
        }
        for (std::size_t i = 0; i < n; ++i) REQUIRE((bit_equal(oa[i], ob[i]) && bit_equal(sa[i], sb[i])));
      }
    }
  }
}

TEST_CASE("ISA selection") {
  CHECK(kernels::parse_isa("scalar") == kernels::Isa::Scalar);
  CHECK(kernels::parse_isa("avx2") == kernels::Isa::Avx2);
  CHECK_FALSE(kernels::parse_isa("neon").has_value());
  const auto before = kernels::active_isa();
  kernels::set_isa(kernels::Isa::Scalar);
  CHECK(kernels::active().isa == kernels::Isa::Scalar);
  kernels::set_isa(before);
}
