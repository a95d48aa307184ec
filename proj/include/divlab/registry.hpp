#pragma once

#include "divlab/axioms.hpp"
#include "divlab/catalog.hpp"
#include "divlab/core.hpp"

#include <string>
#include <variant>
#include <vector>

namespace divlab {

// ─── Worked counterexamples with frozen expected values ─────────────────────

using MatrixInput = std::variant<DistanceMatrix, SimilarityMatrix>;

MeasureValue evaluate_input(const MeasureHandle& m, const MatrixInput& input);

struct RegistryValueCheck {
  std::string label;
  MeasureHandle measure;
  MatrixInput input;
  double expected = 0.0;
  double tol = 0.0;  // absolute
  bool expect_neg_inf = false;
};

// Expects value(lesser) < value(greater): the documented wrong-way ordering.
struct RegistryOrderCheck {
  std::string label;
  MeasureHandle measure;
  MatrixInput lesser;
  MatrixInput greater;
};

struct RegistryCase {
  std::string id;
  std::string claim;  // what behavior the case demonstrates
  std::vector<RegistryValueCheck> values;
  std::vector<RegistryOrderCheck> orders;
};

struct RegistryOutcome {
  bool passed = true;
  std::vector<std::string> failures;
  int checks = 0;
};

std::vector<std::string> registry_case_ids();
RegistryCase registry_case(const std::string& id);  // UnknownCase for bad ids
RegistryOutcome run_registry_case(const RegistryCase& c);

// The species-q-scan case at a custom grid step (the catalogued case uses
// 0.1); orders q over [0, 100] excluding the undefined q = 1.
RegistryCase species_scan_case(double step);

// ─── Canonical configurations used by the cases ─────────────────────────────

PointConfiguration four_per_corner_config();   // 16 points, 4 on each unit-square corner
PointConfiguration grid_config();              // 4x4 grid with spacing 1/3
PointConfiguration two_corner_config();        // 8 + 8 points on opposite corners
SimilarityMatrix circle_cosine(const std::vector<double>& angles);

// ─── Targeted axiom witnesses (probed before random search) ──────────────────

struct TargetedWitness {
  MeasureKind kind = MeasureKind::distance_based;
  Eigen::MatrixXd a;  // expected strictly more diverse side
  Eigen::MatrixXd b;
  std::string note;
};

std::vector<TargetedWitness> monotonicity_witnesses(const MeasureHandle& m);
std::vector<TargetedWitness> uniqueness_witnesses(const MeasureHandle& m);

// Distance configurations where a measure's continuity is expected to break.
std::vector<DistanceMatrix> continuity_witnesses(const MeasureHandle& m);

// ─── Catalogued axiom pattern (true = satisfied) ─────────────────────────────

struct ExpectedProperties {
  std::string measure;
  bool monotonicity = false;
  bool uniqueness = false;
  bool continuity = false;
};

std::vector<ExpectedProperties> expected_properties();
nlohmann::json expected_properties_json();

// Compares a computed matrix against expected_properties() for the rows it
// contains; fills `mismatches` with "measure/axiom" strings.
bool matches_expected_properties(const PropertyMatrixReport& report,
                                 std::vector<std::string>* mismatches);

}  // namespace divlab
