#include "divlab/core.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace divlab {

namespace {

std::string ij_msg(const char* what, int i, int j) {
  std::ostringstream os;
  os << what << "(" << i + 1 << "," << j + 1 << ")";
  return os.str();
}

}  // namespace

MeasureValue neg_infinity() { return -std::numeric_limits<double>::infinity(); }

int space_dim(Space space) { return space == Space::unit_square ? 2 : 1; }

std::string space_name(Space space) {
  switch (space) {
    case Space::unit_square: return "unit_square";
    case Space::unit_circle: return "unit_circle";
    case Space::unit_segment: return "unit_segment";
  }
  return "unit_square";
}

Space space_from_name(const std::string& name) {
  if (name == "unit_square") return Space::unit_square;
  if (name == "unit_circle") return Space::unit_circle;
  if (name == "unit_segment") return Space::unit_segment;
  throw Error(Errc::invalid_points, "unknown space: " + name);
}

double circle_distance(double a, double b) {
  double d = std::abs(a - b);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  return std::min(d, two_pi - d);
}

PointConfiguration PointConfiguration::validate(Space space, std::vector<std::vector<double>> points) {
  const int dim = space_dim(space);
  for (size_t i = 0; i < points.size(); ++i) {
    if (static_cast<int>(points[i].size()) != dim) {
      Error e(Errc::invalid_points,
              "point " + std::to_string(i + 1) + " has " + std::to_string(points[i].size()) +
                  " coordinates, expected " + std::to_string(dim));
      e.i = static_cast<int>(i);
      throw e;
    }
    for (double c : points[i]) {
      bool ok = true;
      if (space == Space::unit_circle) {
        ok = c >= 0.0 && c < 2.0 * std::numbers::pi;
      } else {
        ok = c >= 0.0 && c <= 1.0;
      }
      if (!std::isfinite(c) || !ok) {
        Error e(Errc::invalid_points,
                "point " + std::to_string(i + 1) + " outside " + space_name(space));
        e.i = static_cast<int>(i);
        throw e;
      }
    }
  }
  PointConfiguration cfg;
  cfg.space = space;
  cfg.points = std::move(points);
  return cfg;
}

DistanceMatrix DistanceMatrix::validate(Eigen::MatrixXd raw, double zero_tol) {
  const auto n = raw.rows();
  if (n == 0 || raw.cols() != n) {
    throw Error(Errc::not_square, "distance matrix is not square");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (std::abs(raw(i, j)) <= zero_tol) raw(i, j) = 0.0;
    }
    raw(i, i) = 0.0;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!(raw(i, j) >= 0.0)) {
        Error e(Errc::negative_entry, ij_msg("NegativeEntry", int(i), int(j)));
        e.i = int(i);
        e.j = int(j);
        throw e;
      }
      if (raw(i, j) != raw(j, i)) {
        Error e(Errc::asymmetric_entry, ij_msg("AsymmetricEntry", int(i), int(j)));
        e.i = int(i);
        e.j = int(j);
        throw e;
      }
    }
  }
  // Condition 2: coinciding objects must agree on every third distance.
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (raw(i, j) != 0.0) continue;
      for (Eigen::Index k = 0; k < n; ++k) {
        if (raw(i, k) != raw(j, k)) {
          Error e(Errc::inconsistent_duplicate,
                  "InconsistentDuplicate(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                      "," + std::to_string(k + 1) + ")");
          e.i = int(i);
          e.j = int(j);
          e.k = int(k);
          throw e;
        }
      }
    }
  }
  return DistanceMatrix(std::move(raw));
}

SimilarityMatrix SimilarityMatrix::validate(Eigen::MatrixXd raw, double eps_psd) {
  const auto n = raw.rows();
  if (n == 0 || raw.cols() != n) {
    throw Error(Errc::not_square, "similarity matrix is not square");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (raw(i, i) != 1.0) {
      Error e(Errc::diagonal_not_one, "DiagonalNotOne(" + std::to_string(i + 1) + ")");
      e.i = int(i);
      throw e;
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      if (raw(i, j) != raw(j, i)) {
        Error e(Errc::asymmetric, ij_msg("Asymmetric", int(i), int(j)));
        e.i = int(i);
        e.j = int(j);
        throw e;
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(raw, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(Errc::no_convergence, "eigendecomposition did not converge");
  }
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -eps_psd) {
    Error e(Errc::not_psd, "NotPSD(min_eigenvalue=" + std::to_string(min_eig) + ")");
    e.detail = min_eig;
    throw e;
  }
  return SimilarityMatrix(std::move(raw), min_eig);
}

std::vector<int> DuplicateClasses::representatives() const {
  std::vector<int> reps;
  reps.reserve(classes.size());
  for (const auto& c : classes) reps.push_back(c.front());
  return reps;
}

DuplicateClasses duplicate_classes(const DistanceMatrix& d) {
  const int n = d.size();
  DuplicateClasses result;
  result.class_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (result.class_of[i] >= 0) continue;
    const int id = result.count();
    result.classes.push_back({i});
    result.class_of[i] = id;
    for (int j = i + 1; j < n; ++j) {
      if (result.class_of[j] < 0 && d(i, j) == 0.0) {
        result.classes[id].push_back(j);
        result.class_of[j] = id;
      }
    }
  }
  return result;
}

DistanceMatrix distances_from_points(const PointConfiguration& cfg) {
  const int n = cfg.size();
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto& p = cfg.points[i];
      const auto& q = cfg.points[j];
      double dist = 0.0;
      if (p == q) {
        dist = 0.0;  // exact coincidence, exact zero
      } else {
        switch (cfg.space) {
          case Space::unit_square:
            dist = std::hypot(p[0] - q[0], p[1] - q[1]);
            break;
          case Space::unit_segment:
            dist = std::abs(p[0] - q[0]);
            break;
          case Space::unit_circle:
            dist = circle_distance(p[0], q[0]);
            break;
        }
      }
      d(i, j) = dist;
      d(j, i) = dist;
    }
  }
  return DistanceMatrix::validate(std::move(d), 0.0);
}

SimilarityMatrix cosine_similarity_from_angles(const PointConfiguration& cfg) {
  if (cfg.space != Space::unit_circle) {
    throw Error(Errc::invalid_points, "cosine similarity requires unit_circle points");
  }
  const int n = cfg.size();
  Eigen::MatrixXd s = Eigen::MatrixXd::Ones(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double v = std::cos(circle_distance(cfg.points[i][0], cfg.points[j][0]));
      s(i, j) = v;
      s(j, i) = v;
    }
  }
  return SimilarityMatrix::validate(std::move(s));
}

SimilarityMatrix rbf_similarity_from_distances(const DistanceMatrix& d, double sigma) {
  if (!(sigma > 0.0)) {
    throw Error(Errc::invalid_order, "rbf sigma must be positive");
  }
  const int n = d.size();
  Eigen::MatrixXd s = Eigen::MatrixXd::Ones(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double v = std::exp(-(d(i, j) * d(i, j)) / (sigma * sigma));
      s(i, j) = v;
      s(j, i) = v;
    }
  }
  return SimilarityMatrix::validate(std::move(s));
}

}  // namespace divlab
