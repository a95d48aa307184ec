#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "divlab/optimize.hpp"
#include "divlab/registry.hpp"

#include <numbers>

using namespace divlab;

TEST_CASE("corner mass") {
  CHECK(corner_mass(four_per_corner_config(), 0.05) == 1.0);
  CHECK(corner_mass(grid_config(), 0.05) == doctest::Approx(0.25));
  PointConfiguration center;
  center.space = Space::unit_square;
  center.points.assign(5, {0.5, 0.5});
  CHECK(corner_mass(center, 0.05) == 0.0);
  PointConfiguration seg;
  seg.space = Space::unit_segment;
  CHECK_THROWS_AS(corner_mass(seg, 0.05), Error);
}

TEST_CASE("two points on a segment spread to the endpoints") {
  SearchConfig cfg;
  cfg.measure = make_measure("average");
  cfg.space = Space::unit_segment;
  cfg.n = 2;
  cfg.iterations = 2000;
  cfg.restarts = 2;
  cfg.seed = 9;
  auto traj = maximize(cfg);
  CHECK(traj.final_value >= 1.0 - 1e-9);  // clamped proposals land exactly on 0 and 1

  cfg.measure = make_measure("energy");
  auto en = maximize(cfg);
  CHECK(en.final_value >= -1.0 - 1e-9);  // -1/d maximized at d = 1
}

TEST_CASE("sum_diameter drives all points onto two opposite corners") {
  SearchConfig cfg;
  cfg.measure = make_measure("sum_diameter");
  cfg.space = Space::unit_square;
  cfg.n = 16;
  cfg.iterations = 20000;
  cfg.restarts = 8;
  cfg.seed = 42;
  auto traj = maximize(cfg);
  const double two_corner_optimum = 16.0 * std::numbers::sqrt2;
  CHECK(traj.final_value >= 0.98 * two_corner_optimum);
  CHECK(corner_mass(traj.final_points, 0.05) == 1.0);
}

TEST_CASE("trajectories increase strictly and replay bit for bit") {
  SearchConfig cfg;
  cfg.measure = make_measure("average");
  cfg.space = Space::unit_square;
  cfg.n = 6;
  cfg.iterations = 1500;
  cfg.restarts = 3;
  cfg.seed = 314;
  auto a = maximize(cfg);
  auto b = maximize(cfg);

  REQUIRE(!a.accepted.empty());
  for (size_t i = 1; i < a.accepted.size(); ++i) {
    CHECK(a.accepted[i].value > a.accepted[i - 1].value);
  }
  CHECK(a.final_value == b.final_value);
  CHECK(a.best_restart == b.best_restart);
  REQUIRE(a.accepted.size() == b.accepted.size());
  for (size_t i = 0; i < a.accepted.size(); ++i) {
    CHECK(a.accepted[i].iteration == b.accepted[i].iteration);
    CHECK(a.accepted[i].value == b.accepted[i].value);
    CHECK(a.accepted[i].moved_index == b.accepted[i].moved_index);
  }
  CHECK(a.final_points.points == b.final_points.points);
  CHECK(a.final_value == doctest::Approx(a.accepted.back().value));

  CHECK(trajectory_csv(a) == trajectory_csv(b));
  CHECK(trajectory_csv(a).starts_with("iteration,value,moved_index\n"));
}

TEST_CASE("configuration errors") {
  SearchConfig cfg;
  cfg.measure = make_measure("average");
  cfg.n = 1;
  CHECK_THROWS_AS(maximize(cfg), Error);
  cfg.n = 4;
  cfg.iterations = 0;
  CHECK_THROWS_AS(maximize(cfg), Error);

  // similarity measures need the circle + cosine kernel
  SearchConfig sim;
  sim.measure = make_measure("vendi");
  sim.space = Space::unit_square;
  sim.n = 4;
  sim.iterations = 10;
  sim.restarts = 1;
  CHECK_THROWS_AS(maximize(sim), Error);
  sim.space = Space::unit_circle;
  CHECK(maximize(sim).final_value > 0.0);
}

TEST_CASE("svg rendering") {
  auto svg = render_svg(four_per_corner_config());
  CHECK(svg.find("viewBox=\"0 0 512 512\"") != std::string::npos);
  CHECK(svg.find("<rect") != std::string::npos);
  CHECK(svg.find("r=\"4\"") != std::string::npos);

  PointConfiguration circle;
  circle.space = Space::unit_circle;
  circle.points = {{0.0}, {1.0}};
  CHECK(render_svg(circle).find("<circle cx=\"256\" cy=\"256\" r=\"240\"") != std::string::npos);
}
