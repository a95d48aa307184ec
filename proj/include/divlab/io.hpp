#pragma once

#include "divlab/core.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace divlab {

// CSV matrices: comma-separated, row-major, one row per line, '.' decimal
// separator, no header. Doubles are written in shortest round-trip form, so
// save(load(f)) is byte-stable for canonically formatted files.
Eigen::MatrixXd parse_csv_matrix(std::istream& in);
Eigen::MatrixXd load_csv_matrix(const std::string& path);
std::string format_csv_matrix(const Eigen::MatrixXd& m);
void save_csv_matrix(const Eigen::MatrixXd& m, const std::string& path);

DistanceMatrix load_distance_matrix(const std::string& path, double zero_tol = 0.0);
SimilarityMatrix load_similarity_matrix(const std::string& path, double eps_psd = 1e-9);

// JSON points: {"space": "unit_square"|"unit_circle"|"unit_segment",
//               "points": [[...], ...]}
PointConfiguration points_from_json(const nlohmann::json& j);
nlohmann::json points_to_json(const PointConfiguration& cfg);
PointConfiguration load_points(const std::string& path);
void save_points(const PointConfiguration& cfg, const std::string& path);

// Measure values serialize as a number, with "-inf" for minus infinity.
nlohmann::json value_to_json(MeasureValue v);

// {"measure": name, "params": {...}, "value": number|"-inf"}
nlohmann::json measure_report(const std::string& measure, const nlohmann::json& params,
                              MeasureValue value);
void save_report(const nlohmann::json& report, const std::string& path);

std::string format_double(double v);  // shortest round-trip decimal

}  // namespace divlab
