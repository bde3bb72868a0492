#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "chaoscert/class_g.hpp"
#include "chaoscert/error.hpp"
#include "chaoscert/region_scan.hpp"
#include "support/oracles.hpp"

using namespace chaoscert;

TEST_CASE("label rules") {
  CHECK(label_for(3.0, 2.0, 4.0, true, true) == RegionLabel::C);
  CHECK(label_for(3.0, 2.0, 4.0, true, false) == RegionLabel::B);
  CHECK(label_for(1.0, 2.0, 4.0, false, true) == RegionLabel::A);
  CHECK(label_for(5.0, 2.0, 4.0, false, true) == RegionLabel::D);
  CHECK(label_for(1.0, 2.0, 4.0, false, false) == RegionLabel::None);
  CHECK(to_string(RegionLabel::C) == "c");
  CHECK(to_string(RegionLabel::None) == "none");
}

TEST_CASE("scan grid shape and sampling") {
  const auto g = scan({0.0, 30.0}, {0.0, 12.0}, 60, 48);
  CHECK(g.cells.size() == 60u * 48u);
  CHECK(g.at(0, 0).alpha == 0.5);
  CHECK(g.at(0, 0).beta == 0.25);
  CHECK(g.at(59, 47).alpha == 30.0);
  CHECK(g.at(59, 47).beta == 12.0);
  std::set<RegionLabel> seen;
  for (const auto& c : g.cells) {
    seen.insert(c.label);
    CHECK(c.in_g == alpha_bounds(c.beta).contains(c.alpha));
    const double m = 1.0 / (1.0 + c.beta);
    const double f2 = oracle::iterate(c.alpha, c.beta, m, 2);
    if (std::isfinite(f2) && std::fabs(f2 - m) > 1e-9) CHECK(c.f2m_ok == (f2 < m));
  }
  CHECK(seen.count(RegionLabel::B) == 1);
  CHECK(seen.count(RegionLabel::C) == 1);
  CHECK_THROWS_AS(scan({0.0, 30.0}, {0.0, 12.0}, 8, 48), Error);
  CHECK_THROWS_AS(scan({0.0, 30.0}, {-1.0, 12.0}, 60, 48), Error);
}

TEST_CASE("region boundaries converge to the class G bounds as the grid refines") {
  double previous = INFINITY;
  for (int nx : {200, 800, 3200}) {
    const auto g = scan({0.0, 30.0}, {1.9, 2.0}, nx, 16);
    double last_in = 0.0;
    for (int i = 0; i < nx; ++i)
      if (g.at(i, 15).in_g) last_in = g.at(i, 15).alpha;
    const double err = std::fabs(last_in - 6.75);
    CHECK(err <= 30.0 / nx);
    CHECK(err <= previous);
    previous = err;
  }
}

TEST_CASE("region CSV schema and export") {
  const auto g = scan({0.0, 30.0}, {0.0, 12.0}, 16, 16);
  std::ostringstream out;
  write_region_csv(out, g);
  const auto text = out.str();
  CHECK(text.rfind("alpha,beta,label\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 257);

  const auto dir = std::filesystem::temp_directory_path() / "chaoscert_region_test";
  std::filesystem::create_directories(dir);
  FigureParams p;
  p.nx = 20;
  p.ny = 16;
  CHECK(export_figure_data(FigureKind::Region, p, dir / "r.csv") == 320);
  p.curve_beta = 3.0;
  p.curve_n = 30;
  const auto rows = export_figure_data(FigureKind::Curves, p, dir / "c.csv");
  CHECK(rows >= 60);
  std::ifstream in(dir / "c.csv");
  std::string header;
  std::getline(in, header);
  CHECK(header == "beta,alpha,k,kind");
  try {
    export_figure_data(FigureKind::Region, p, dir / "missing" / "x.csv");
    FAIL("expected Io");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
    CHECK(std::string(e.what()).find("x.csv") != std::string::npos);
  }
  std::filesystem::remove_all(dir);
}
