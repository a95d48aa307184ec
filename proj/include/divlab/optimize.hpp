#pragma once

#include "divlab/catalog.hpp"
#include "divlab/core.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace divlab {

// Seeded hill climbing over point configurations: round-robin point updates,
// Gaussian jitter mixed 1:1 with uniform resampling, accept only strict
// improvements. Similarity-based measures are evaluated through the cosine
// kernel and therefore require the unit_circle space.
struct SearchConfig {
  MeasureHandle measure;
  Space space = Space::unit_square;
  int n = 16;
  int iterations = 20000;
  double proposal_scale = 0.0;  // <= 0 picks 0.1 * space diameter
  int restarts = 8;
  std::uint64_t seed = 0;
};

struct TrajectoryStep {
  int iteration = 0;
  double value = 0.0;
  int moved_index = 0;
};

struct Trajectory {
  std::vector<TrajectoryStep> accepted;  // strictly increasing values
  PointConfiguration final_points;
  double final_value = 0.0;
  int best_restart = 0;
};

// Best restart wins by value, ties by lowest restart index; restart r uses
// seed + r, so results are reproducible bit for bit.
Trajectory maximize(const SearchConfig& cfg);

// Fraction of points within `radius` of the nearest unit-square corner.
double corner_mass(const PointConfiguration& cfg, double radius);

double space_diameter(Space space);

std::string trajectory_csv(const Trajectory& t);

// 512x512 scatter of the final configuration with the space boundary drawn.
std::string render_svg(const PointConfiguration& cfg);

}  // namespace divlab
