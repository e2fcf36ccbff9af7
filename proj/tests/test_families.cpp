#include <doctest.h>

#include <cmath>

#include "families.hpp"

using namespace fillings;

TEST_CASE("gamma family") {
  for (int n = 1; n <= 4; ++n) {
    GammaReport g = gamma_n(n);
    CHECK(g.diagram.area() == (1 << n) - 1);
    CHECK(g.horizontal_diam == (1 << n));
    CHECK(g.horizontal_dual_geodesic);
    CHECK(g.searched_value <= 4 * n);
    // the searched tree beats the horizontal one by n = 4
    if (n == 4) CHECK(g.searched_value < g.horizontal_diam);
  }
}

TEST_CASE("ternary trees and sweep widths") {
  CHECK(ternary_tree(1).edges.size() == 1);
  CHECK(ternary_tree(3).edges.size() == 9);
  CHECK(ternary_tree(4).edges.size() == 27);
  CHECK(ternary_sweep_width(1) >= 2);
  CHECK(ternary_sweep_width(2) >= 3);
  CHECK(ternary_sweep_width(3) >= 4);
}

TEST_CASE("delta family measures") {
  DeltaReport d1 = delta_n(1);
  CHECK(d1.diagram.area() == 1);
  DeltaReport d2 = delta_n(2);
  CHECK(d2.diagram.area() == 16);
  CHECK(d2.boundary == 20);
  DeltaReport d3 = delta_n(3);
  CHECK(d3.boundary <= 8);
  CHECK(d3.diagram.area() > 100);
  // sub-quadratic growth of both diameters: a C * n^1.9 fit covers the data
  double di[4] = {0, static_cast<double>(d1.measures.idiam), static_cast<double>(d2.measures.idiam),
                  static_cast<double>(d3.measures.idiam)};
  double gl[4] = {0, static_cast<double>(d1.measures.gl), static_cast<double>(d2.measures.gl),
                  static_cast<double>(d3.measures.gl)};
  for (int n = 1; n <= 3; ++n) {
    CHECK(di[n] <= 2.2 * std::pow(n, 1.9));
    CHECK(gl[n] <= 1.5 * std::pow(n, 1.9));
  }
  // the constructive upper bound is sane
  CHECK(d3.fl_upper >= d3.boundary);
}

TEST_CASE("delta exact filling length beats the round disc") {
  DeltaReport d2 = delta_n(2, true);
  REQUIRE(d2.fl_exact > 0);
  Diagram disc = round_grid_disc(d2.diagram.area());
  ShellCaps caps;
  caps.max_faces = 20;
  caps.max_states = 8000000;
  ShellFlResult fd = shell_fl_exact(disc, caps);
  REQUIRE(fd.exact);
  CHECK(d2.fl_exact > fd.value);
  CHECK(d2.fl_exact == 22);
  CHECK(fd.value == 18);
}

TEST_CASE("delta_1 exact shelling") {
  DeltaReport d1 = delta_n(1, true);
  CHECK(d1.fl_exact == 6);
  CHECK(d1.fl_lower_evidence == 6);
}
