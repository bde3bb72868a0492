#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "chaoscert/dkm_criterion.hpp"
#include "chaoscert/kernels.hpp"
#include "chaoscert/serialize.hpp"
#include "support/run.hpp"

namespace fs = std::filesystem;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) out.push_back(f);
  return out;
}

}  // namespace

TEST_CASE("certify exit codes and verdict JSON") {
  auto r = run::cli("certify --alpha 3.9 --beta 1");
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "OddCycleAndTurbulent");
  const auto v = chaoscert::verdict_from_json(j);
  CHECK(chaoscert::same_verdict(v, chaoscert::classify(chaoscert::PollutionMap(3.9, 1.0))));

  CHECK(run::cli("certify --alpha 3.0 --beta 1").status == 1);
  r = run::cli("certify --alpha 5.0 --beta 1");
  CHECK(r.status == 2);
  CHECK(nlohmann::json::parse(r.out)["status"] == "NotInG");
}

TEST_CASE("usage, input and I/O errors") {
  CHECK(run::cli("certify --alpha 3.9").status == 64);
  CHECK(run::cli("frobnicate").status == 64);
  CHECK(run::cli("").status == 64);
  CHECK(run::cli("certify --alpha abc --beta 1").status == 64);
  CHECK(run::cli("certify --alpha -3 --beta 1").status == 65);
  CHECK(run::cli("certify --alpha 3.9 --beta 0").status == 65);
  CHECK(run::cli("certify --alpha 3.9 --beta 1 --kernel neon").status == 65);
  CHECK(run::cli("sweep --beta-range 10:1 --out /dev/null").status == 65);
  CHECK(run::cli("scan --nx 4 --out /dev/null").status == 65);
  CHECK(run::cli("scan --nx 16 --ny 16 --out /nonexistent/dir/x.csv").status == 74);
  CHECK(run::cli("--config /nonexistent.conf threshold --beta 2").status == 74);
}

TEST_CASE("threshold printout") {
  auto r = run::cli("threshold --beta 2");
  REQUIRE(r.status == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[1].find("5.574") != std::string::npos);
  CHECK(run::cli("threshold --beta 3").out.find("9.481") != std::string::npos);
  CHECK(run::cli("threshold --beta 1 --tol 1e-10").out.find("3.236") != std::string::npos);

  r = run::cli("threshold --beta 1 --format json");
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::fabs(j["f2m_threshold"].get<double>() - (1.0 + std::sqrt(5.0))) <= 1e-9);

  ls = lines(run::cli("threshold --beta 10 --format csv").out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == "beta,g_lower,g_upper,f2m_threshold,chaos_threshold");
  CHECK(std::fabs(std::stod(fields(ls[1])[4]) - 11.795) <= 1e-3);
}

TEST_CASE("data files") {
  const auto dir = run::scratch("cli");

  auto r = run::cli("scan --nx 40 --ny 30 --out " + (dir / "fig1.csv").string());
  REQUIRE(r.status == 0);
  CHECK(r.out.find("1200 rows") != std::string::npos);
  auto ls = lines(run::slurp(dir / "fig1.csv"));
  CHECK(ls.size() == 1201);
  CHECK(ls[0] == "alpha,beta,label");

  r = run::cli("curves --beta 3 --out " + (dir / "fig3.csv").string());
  REQUIRE(r.status == 0);
  ls = lines(run::slurp(dir / "fig3.csv"));
  CHECK(ls[0] == "beta,alpha,k,kind");
  int mline = 0;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto f = fields(ls[i]);
    REQUIRE(f.size() == 4);
    if (f[3] == "m_line") {
      ++mline;
      CHECK(std::stod(f[2]) == 0.25);
    }
  }
  CHECK(mline == 200);

  r = run::cli("sweep --beta-range 1:10 --n 19 --out " + (dir / "thresholds.csv").string());
  REQUIRE(r.status == 0);
  ls = lines(run::slurp(dir / "thresholds.csv"));
  REQUIRE(ls.size() == 20);
  double prev = 0.0;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto f = fields(ls[i]);
    const double beta = std::stod(f[0]), upper = std::stod(f[2]);
    CHECK(upper > prev);
    CHECK(upper == doctest::Approx(std::pow(beta + 1.0, beta + 1.0) / std::pow(beta, beta)).epsilon(1e-13));
    prev = upper;
  }

  r = run::cli("sweep --beta-range 1:2 --n 3 --format json --out " + (dir / "t.json").string());
  REQUIRE(r.status == 0);
  CHECK(nlohmann::json::parse(run::slurp(dir / "t.json")).size() == 3);
  fs::remove_all(dir);
}

TEST_CASE("config file precedence") {
  const auto dir = run::scratch("conf");
  {
    std::ofstream conf(dir / "c.conf");
    conf << "[scan]\nnx = 20\nny = 16\n";
  }
  const std::string env = "CHAOSCERT_CONFIG=" + (dir / "c.conf").string();
  const std::string out = " --out " + (dir / "r.csv").string();
  CHECK(run::cli("scan" + out, env).out.find("320 rows") != std::string::npos);
  CHECK(run::cli("scan --nx 32" + out, env).out.find("512 rows") != std::string::npos);
  CHECK(run::cli("--config " + (dir / "c.conf").string() + " scan" + out).out.find("320 rows") != std::string::npos);
  {
    std::ofstream conf(dir / "bad.conf");
    conf << "[scan]\nnxx = 20\n";
  }
  CHECK(run::cli("--config " + (dir / "bad.conf").string() + " scan" + out).status == 64);
  fs::remove_all(dir);
}

TEST_CASE("repeated runs, worker counts and kernels give identical bytes") {
  const auto dir = run::scratch("det");
  const std::vector<std::string> commands = {
      "scan --nx 64 --ny 48 --out {}",
      "curves --beta 2 --n 60 --out {}",
      "sweep --beta-range 1:10 --n 10 --out {}",
  };
  for (const auto& tmpl : commands) {
    std::vector<std::string> outputs;
    int i = 0;
    for (const std::string prefix :
         {"--threads 1", "--threads 1", "--threads 4", "--threads 3 --kernel scalar", "--threads 2 --kernel avx2"}) {
      if (prefix.find("avx2") != std::string::npos &&
          !chaoscert::kernels::isa_supported(chaoscert::kernels::Isa::Avx2))
        continue;
      const auto path = dir / ("out" + std::to_string(i++));
      std::string cmd = tmpl;
      cmd.replace(cmd.find("{}"), 2, path.string());
      REQUIRE(run::cli(prefix + " " + cmd).status == 0);
      outputs.push_back(run::slurp(path));
    }
    for (const auto& o : outputs) CHECK(o == outputs.front());
  }
  for (const std::string args : {"certify --alpha 6 --beta 2", "threshold --beta 3 --format json",
                                 "oracle --alpha 3.9 --beta 1"}) {
    const auto a = run::cli("--threads 1 " + args);
    const auto b = run::cli("--threads 4 " + args);
    CHECK(a.out == b.out);
    CHECK(a.status == b.status);
  }
  fs::remove_all(dir);
}
