#include "divlab/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

namespace divlab {

namespace {

double parse_double(const std::string& token, int line_no) {
  // from_chars rejects leading whitespace and trailing junk, which keeps the
  // format strict; allow a leading '+' since to_chars never emits one.
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    Error e(Errc::parse_error, "ParseError(" + std::to_string(line_no) + "): bad number '" + token + "'");
    e.i = line_no;
    throw e;
  }
  return value;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    Error e(Errc::parse_error, "cannot open " + path);
    e.i = 0;
    throw e;
  }
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    Error e(Errc::parse_error, "cannot open " + path + " for writing");
    e.i = 0;
    throw e;
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

Eigen::MatrixXd parse_csv_matrix(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string token;
    while (std::getline(ss, token, ',')) {
      row.push_back(parse_double(token, line_no));
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      Error e(Errc::parse_error,
              "ParseError(" + std::to_string(line_no) + "): expected " +
                  std::to_string(rows.front().size()) + " columns, got " + std::to_string(row.size()));
      e.i = line_no;
      throw e;
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    Error e(Errc::parse_error, "ParseError(1): empty matrix");
    e.i = 1;
    throw e;
  }
  Eigen::MatrixXd m(rows.size(), rows.front().size());
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Eigen::MatrixXd load_csv_matrix(const std::string& path) {
  auto in = open_input(path);
  return parse_csv_matrix(in);
}

std::string format_csv_matrix(const Eigen::MatrixXd& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ',';
      out += format_double(m(i, j));
    }
    out += '\n';
  }
  return out;
}

void save_csv_matrix(const Eigen::MatrixXd& m, const std::string& path) {
  auto out = open_output(path);
  out << format_csv_matrix(m);
}

DistanceMatrix load_distance_matrix(const std::string& path, double zero_tol) {
  return DistanceMatrix::validate(load_csv_matrix(path), zero_tol);
}

SimilarityMatrix load_similarity_matrix(const std::string& path, double eps_psd) {
  return SimilarityMatrix::validate(load_csv_matrix(path), eps_psd);
}

PointConfiguration points_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("space") || !j.contains("points")) {
    throw Error(Errc::parse_error, "points JSON must have 'space' and 'points'");
  }
  Space space = space_from_name(j.at("space").get<std::string>());
  std::vector<std::vector<double>> pts;
  for (const auto& p : j.at("points")) {
    pts.push_back(p.get<std::vector<double>>());
  }
  return PointConfiguration::validate(space, std::move(pts));
}

nlohmann::json points_to_json(const PointConfiguration& cfg) {
  nlohmann::json j;
  j["space"] = space_name(cfg.space);
  j["points"] = cfg.points;
  return j;
}

PointConfiguration load_points(const std::string& path) {
  auto in = open_input(path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::parse_error, std::string("bad points JSON: ") + ex.what());
  }
  return points_from_json(j);
}

void save_points(const PointConfiguration& cfg, const std::string& path) {
  auto out = open_output(path);
  out << points_to_json(cfg).dump(2) << '\n';
}

nlohmann::json value_to_json(MeasureValue v) {
  if (is_neg_infinity(v)) return "-inf";
  if (std::isinf(v)) return "inf";  // double overflow of a finite quantity
  return v;
}

nlohmann::json measure_report(const std::string& measure, const nlohmann::json& params,
                              MeasureValue value) {
  nlohmann::json j;
  j["measure"] = measure;
  j["params"] = params;
  j["value"] = value_to_json(value);
  return j;
}

void save_report(const nlohmann::json& report, const std::string& path) {
  auto out = open_output(path);
  out << report.dump(2) << '\n';
}

}  // namespace divlab
