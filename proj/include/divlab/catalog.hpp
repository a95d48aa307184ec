#pragma once

#include "divlab/core.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace divlab {

enum class MeasureKind { distance_based, similarity_based };

// A named diversity measure with fixed parameters. Evaluators are pure and
// deterministic; similarity-based handles must be fed SimilarityMatrix inputs
// produced by a declared kernel.
struct MeasureHandle {
  std::string name;     // canonical id, e.g. "sum_average"
  std::string display;  // table label, e.g. "SumAverage"
  MeasureKind kind = MeasureKind::distance_based;
  std::map<std::string, double> params;
  int min_n = 2;

  std::function<MeasureValue(const DistanceMatrix&)> distance_eval;
  std::function<MeasureValue(const SimilarityMatrix&)> similarity_eval;

  MeasureValue operator()(const DistanceMatrix& d) const;
  MeasureValue operator()(const SimilarityMatrix& s) const;
};

// Optional parameters; a measure reads only the ones it names.
struct MeasureParams {
  double gamma = 1.0;  // energy
  double q = 2.0;      // species
  double t = 1.0;      // circles
};

MeasureHandle make_measure(const std::string& name, const MeasureParams& params = {});

// Every measure id the catalog knows.
std::vector<std::string> catalog_names();

// The 16 catalogued measures in table order, with default parameters
// (energy gamma=1, circles t=1, species q=2).
std::vector<MeasureHandle> catalogued_measures();

}  // namespace divlab
