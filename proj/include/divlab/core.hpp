#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace divlab {

// ─── Errors ──────────────────────────────────────────────────────────────────

enum class Errc {
  not_square,
  negative_entry,
  asymmetric_entry,
  inconsistent_duplicate,
  diagonal_not_one,
  asymmetric,
  not_psd,
  invalid_points,
  parse_error,
  n_too_small,
  invalid_order,
  instance_too_large,
  no_convergence,
  unknown_case,
  no_integer_solution,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message) : std::runtime_error(std::move(message)), code_(code) {}
  Errc code() const { return code_; }

  // Optional payload, 0-based indices where applicable.
  int i = -1;
  int j = -1;
  int k = -1;
  double detail = 0.0;

 private:
  Errc code_;
};

// Extended-real measure result. Finite double or -infinity (Energy with a
// duplicate pair); IEEE ordering already places -inf below every finite value.
using MeasureValue = double;

inline bool is_neg_infinity(MeasureValue v) { return std::isinf(v) && v < 0; }
MeasureValue neg_infinity();

// ─── Geometric spaces ────────────────────────────────────────────────────────

enum class Space { unit_square, unit_circle, unit_segment };

int space_dim(Space space);
std::string space_name(Space space);
Space space_from_name(const std::string& name);

// Geodesic (arc) distance between two angles in radians.
double circle_distance(double a, double b);

// n labeled points in a named space. unit_square points live in [0,1]^2,
// unit_segment points in [0,1], unit_circle points are angles in [0, 2*pi).
struct PointConfiguration {
  Space space = Space::unit_square;
  std::vector<std::vector<double>> points;

  static PointConfiguration validate(Space space, std::vector<std::vector<double>> points);
  int size() const { return static_cast<int>(points.size()); }
};

// ─── Validated matrices ──────────────────────────────────────────────────────

// n x n pairwise distance matrix satisfying
//   1. d_ij >= 0, d_ii = 0
//   2. d_ij = 0  =>  d_ik = d_jk for all k
//   3. d_ij = d_ji
// The triangle inequality is deliberately not required.
class DistanceMatrix {
 public:
  // Entries with |d| <= zero_tol are snapped to exactly 0 before the checks;
  // the diagonal is forced to 0. Default zero_tol = 0 keeps exact-zero
  // duplicate semantics (axiom checks depend on exact coincidence).
  static DistanceMatrix validate(Eigen::MatrixXd raw, double zero_tol = 0.0);

  int size() const { return static_cast<int>(d_.rows()); }
  double operator()(int i, int j) const { return d_(i, j); }
  const Eigen::MatrixXd& data() const { return d_; }

 private:
  explicit DistanceMatrix(Eigen::MatrixXd d) : d_(std::move(d)) {}
  Eigen::MatrixXd d_;
};

// n x n symmetric similarity matrix with unit diagonal, positive
// semi-definite up to eps_psd slack on the smallest eigenvalue.
class SimilarityMatrix {
 public:
  static SimilarityMatrix validate(Eigen::MatrixXd raw, double eps_psd = 1e-9);

  int size() const { return static_cast<int>(s_.rows()); }
  double operator()(int i, int j) const { return s_(i, j); }
  const Eigen::MatrixXd& data() const { return s_; }
  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  SimilarityMatrix(Eigen::MatrixXd s, double min_eig) : s_(std::move(s)), min_eigenvalue_(min_eig) {}
  Eigen::MatrixXd s_;
  double min_eigenvalue_;
};

// Partition of {0..n-1} into zero-distance equivalence classes. Classes are
// ordered by smallest member, members ascending.
struct DuplicateClasses {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;  // index -> class id

  int count() const { return static_cast<int>(classes.size()); }
  std::vector<int> representatives() const;
};

DuplicateClasses duplicate_classes(const DistanceMatrix& d);

// ─── Builders ────────────────────────────────────────────────────────────────

// Pairwise distances for the configuration's space: Euclidean (unit_square),
// |a-b| (unit_segment), arc distance (unit_circle). Coinciding points get an
// exact 0 so the result always passes validation with zero_tol = 0.
DistanceMatrix distances_from_points(const PointConfiguration& cfg);

// s_ij = cos(arc distance) for angles on the circle; PSD by construction
// (Gram matrix of unit vectors).
SimilarityMatrix cosine_similarity_from_angles(const PointConfiguration& cfg);

// Gaussian kernel s_ij = exp(-d_ij^2 / sigma^2). Fails PSD validation when
// the source distances are not Euclidean-embeddable.
SimilarityMatrix rbf_similarity_from_distances(const DistanceMatrix& d, double sigma);

}  // namespace divlab
