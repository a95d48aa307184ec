#include "divlab/optimize.hpp"

#include "divlab/io.hpp"
#include "divlab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace divlab {

namespace {

constexpr int kStaleBeforeHalving = 5000;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0) a += kTwoPi;
  return a;
}

std::vector<double> random_point(Rng& rng, Space space) {
  switch (space) {
    case Space::unit_square: return {rng.uniform(), rng.uniform()};
    case Space::unit_segment: return {rng.uniform()};
    case Space::unit_circle: return {rng.uniform(0.0, kTwoPi)};
  }
  return {};
}

std::vector<double> jitter_point(Rng& rng, Space space, const std::vector<double>& p, double scale) {
  std::vector<double> out = p;
  for (double& c : out) c += scale * rng.gaussian();
  switch (space) {
    case Space::unit_square:
      out[0] = clamp01(out[0]);
      out[1] = clamp01(out[1]);
      break;
    case Space::unit_segment:
      out[0] = clamp01(out[0]);
      break;
    case Space::unit_circle:
      out[0] = wrap_angle(out[0]);
      break;
  }
  return out;
}

MeasureValue evaluate_points(const MeasureHandle& m, const PointConfiguration& cfg) {
  if (m.kind == MeasureKind::distance_based) {
    return m(distances_from_points(cfg));
  }
  if (cfg.space != Space::unit_circle) {
    throw Error(Errc::invalid_order,
                m.name + " is similarity-based; optimization uses the cosine kernel on unit_circle");
  }
  return m(cosine_similarity_from_angles(cfg));
}

}  // namespace

double space_diameter(Space space) {
  switch (space) {
    case Space::unit_square: return std::numbers::sqrt2;
    case Space::unit_segment: return 1.0;
    case Space::unit_circle: return std::numbers::pi;
  }
  return 1.0;
}

Trajectory maximize(const SearchConfig& cfg) {
  if (cfg.n < 2) {
    Error e(Errc::n_too_small, "optimization needs n >= 2");
    e.i = cfg.n;
    throw e;
  }
  if (cfg.iterations < 1 || cfg.restarts < 1) {
    throw Error(Errc::invalid_order, "iterations and restarts must be >= 1");
  }

  Trajectory best;
  bool have_best = false;
  for (int r = 0; r < cfg.restarts; ++r) {
    Rng rng(cfg.seed + static_cast<std::uint64_t>(r));
    PointConfiguration points;
    points.space = cfg.space;
    points.points.reserve(cfg.n);
    for (int i = 0; i < cfg.n; ++i) points.points.push_back(random_point(rng, cfg.space));

    Trajectory traj;
    traj.best_restart = r;
    double value = evaluate_points(cfg.measure, points);
    double scale = cfg.proposal_scale > 0 ? cfg.proposal_scale : 0.1 * space_diameter(cfg.space);
    int stale = 0;

    for (int iter = 1; iter <= cfg.iterations; ++iter) {
      const int idx = (iter - 1) % cfg.n;
      const std::vector<double> old = points.points[idx];
      points.points[idx] = rng.coin() ? jitter_point(rng, cfg.space, old, scale)
                                      : random_point(rng, cfg.space);
      const double proposed = evaluate_points(cfg.measure, points);
      if (proposed > value) {
        value = proposed;
        traj.accepted.push_back({iter, value, idx});
        stale = 0;
      } else {
        points.points[idx] = old;
        if (++stale >= kStaleBeforeHalving) {
          scale *= 0.5;
          stale = 0;
        }
      }
    }
    traj.final_points = std::move(points);
    traj.final_value = value;
    if (!have_best || traj.final_value > best.final_value) {
      best = std::move(traj);
      have_best = true;
    }
  }
  return best;
}

double corner_mass(const PointConfiguration& cfg, double radius) {
  if (cfg.space != Space::unit_square) {
    throw Error(Errc::invalid_points, "corner_mass is defined on unit_square configurations");
  }
  int inside = 0;
  for (const auto& p : cfg.points) {
    double nearest = std::numeric_limits<double>::infinity();
    for (double cx : {0.0, 1.0}) {
      for (double cy : {0.0, 1.0}) {
        nearest = std::min(nearest, std::hypot(p[0] - cx, p[1] - cy));
      }
    }
    if (nearest <= radius) ++inside;
  }
  return cfg.points.empty() ? 0.0 : static_cast<double>(inside) / cfg.points.size();
}

std::string trajectory_csv(const Trajectory& t) {
  std::string out = "iteration,value,moved_index\n";
  for (const auto& step : t.accepted) {
    out += std::to_string(step.iteration);
    out += ',';
    out += format_double(step.value);
    out += ',';
    out += std::to_string(step.moved_index);
    out += '\n';
  }
  return out;
}

std::string render_svg(const PointConfiguration& cfg) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 512 512\">\n";
  auto dot = [&os](double x, double y) {
    os << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"4\" fill=\"#1f6fb2\"/>\n";
  };
  switch (cfg.space) {
    case Space::unit_square:
      os << "  <rect x=\"16\" y=\"16\" width=\"480\" height=\"480\" fill=\"none\" "
            "stroke=\"#444\"/>\n";
      for (const auto& p : cfg.points) dot(16 + 480 * p[0], 16 + 480 * (1.0 - p[1]));
      break;
    case Space::unit_segment:
      os << "  <line x1=\"16\" y1=\"256\" x2=\"496\" y2=\"256\" stroke=\"#444\"/>\n";
      for (const auto& p : cfg.points) dot(16 + 480 * p[0], 256);
      break;
    case Space::unit_circle:
      os << "  <circle cx=\"256\" cy=\"256\" r=\"240\" fill=\"none\" stroke=\"#444\"/>\n";
      for (const auto& p : cfg.points) {
        dot(256 + 240 * std::cos(p[0]), 256 - 240 * std::sin(p[0]));
      }
      break;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace divlab
