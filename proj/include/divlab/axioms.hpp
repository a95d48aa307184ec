#pragma once

#include "divlab/catalog.hpp"
#include "divlab/core.hpp"
#include "divlab/rng.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace divlab {

// ─── Verdicts ────────────────────────────────────────────────────────────────

enum class Axiom { monotonicity, uniqueness, continuity, duplicate_placement };
enum class Verdict { violated, no_violation_found };

std::string axiom_name(Axiom axiom);

// Floating-point band for "strictly increasing": a probe passes only when
// value(A) > value(B) + kStrictMargin; gaps inside (0, kStrictMargin] are
// counted as inconclusive rather than as violations.
inline constexpr double kStrictMargin = 1e-12;

struct Witness {
  MeasureKind kind = MeasureKind::distance_based;
  Eigen::MatrixXd a;  // expected strictly more diverse (perturbed / fresh element)
  Eigen::MatrixXd b;  // base / duplicate side
  double value_a = 0.0;
  double value_b = 0.0;
  std::string note;
};

// Checkers are falsifiers: a stored witness proves violation;
// no_violation_found only reports that the probe budget found nothing.
struct AxiomVerdict {
  std::string measure;
  Axiom axiom = Axiom::monotonicity;
  Verdict outcome = Verdict::no_violation_found;
  std::optional<Witness> witness;
  int probes = 0;
  int inconclusive = 0;
  std::uint64_t seed = 0;
  std::string kernel;  // declared kernel for similarity-based audits

  bool violated() const { return outcome == Verdict::violated; }
};

nlohmann::json verdict_to_json(const AxiomVerdict& v);

// ─── Valid perturbations of distance matrices ────────────────────────────────

// Symmetric increments (i, j, eps) with eps > 0. Plans are built class-aware
// so the perturbed matrix stays valid: distances between two duplicate
// classes move together, and splitting an element out of its class raises its
// distance to every former classmate by the same amount.
struct PerturbationDelta {
  int i = 0;
  int j = 0;
  double eps = 0.0;
};

struct PerturbationPlan {
  std::vector<PerturbationDelta> deltas;
};

Eigen::MatrixXd apply_plan(const DistanceMatrix& base, const PerturbationPlan& plan,
                           double scale = 1.0);

// All distances between classes a and b grow by eps.
PerturbationPlan between_class_plan(const DuplicateClasses& classes, int a, int b, double eps);
// Element `member` leaves its duplicate class; eps to each former classmate.
PerturbationPlan split_plan(const DuplicateClasses& classes, int member, double eps);

// 1-3 random sub-plans merged; result is always valid for `base`.
PerturbationPlan random_plan(Rng& rng, const DistanceMatrix& base);

// ─── Random inputs for probing ───────────────────────────────────────────────

// Random member of D_n built from a random class structure with independent
// positive class-level distances (the triangle inequality is not imposed).
DistanceMatrix random_distance_matrix(Rng& rng, int n, double duplicate_prob);

// Random circle angles inside [0, arc]; with probability duplicate_prob one
// angle duplicates another.
std::vector<double> random_arc_angles(Rng& rng, int n, double arc, double duplicate_prob);

SimilarityMatrix cosine_matrix(const std::vector<double>& angles);

// B with element 0 duplicating element 1; A with element 0 replaced by a
// fresh element at positive class-consistent distances.
std::pair<DistanceMatrix, DistanceMatrix> random_uniqueness_pair(Rng& rng, int n);

// ─── Axiom checkers ──────────────────────────────────────────────────────────

AxiomVerdict check_monotonicity(const MeasureHandle& m, int budget, std::uint64_t seed);
AxiomVerdict check_uniqueness(const MeasureHandle& m, int budget, std::uint64_t seed);

// Probes each witness along shrinking steps eps_k = 2^-k, k = 1..20, and
// reports a violation when the value gap stabilizes above 10x the tolerance
// instead of vanishing. Heuristic jump detection, not a proof of continuity.
AxiomVerdict check_continuity(const MeasureHandle& m, const std::vector<DistanceMatrix>& witnesses,
                              std::uint64_t seed, double tol = 1e-6);
// Same with default witnesses (duplicate-boundary, threshold-boundary for
// thresholded measures, and random configurations).
AxiomVerdict check_continuity(const MeasureHandle& m, std::uint64_t seed, double tol = 1e-6);

// Checks that diversity does not depend on how n-k duplicates are assigned to
// k distinct base elements: evaluates every multiplicity vector and reports a
// witness pair when two values differ by more than 1e-9 relative.
AxiomVerdict check_duplicate_placement_invariance(const MeasureHandle& m, int k, int n,
                                                  std::uint64_t seed, int budget = 10000);

// ─── Property matrix ─────────────────────────────────────────────────────────

struct PropertyRow {
  MeasureHandle measure;
  AxiomVerdict monotonicity;
  AxiomVerdict uniqueness;
  AxiomVerdict continuity;
};

struct PropertyMatrixReport {
  std::vector<PropertyRow> rows;
  int budget = 0;
  std::uint64_t seed = 0;
};

PropertyMatrixReport property_matrix(const std::vector<MeasureHandle>& measures, int budget,
                                     std::uint64_t seed);

std::string format_property_table(const PropertyMatrixReport& report);
nlohmann::json property_matrix_json(const PropertyMatrixReport& report);

}  // namespace divlab
