#include "divlab/registry.hpp"

#include "divlab/measures_poly.hpp"

#include <cmath>
#include <numbers>

namespace divlab {

namespace {

Eigen::MatrixXd tri3(double d12, double d13, double d23) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(3, 3);
  d(0, 1) = d(1, 0) = d12;
  d(0, 2) = d(2, 0) = d13;
  d(1, 2) = d(2, 1) = d23;
  return d;
}

DistanceMatrix dist(const Eigen::MatrixXd& m) { return DistanceMatrix::validate(m); }

PointConfiguration square_points(std::vector<std::vector<double>> pts) {
  return PointConfiguration::validate(Space::unit_square, std::move(pts));
}

PointConfiguration segment_points(std::vector<double> xs) {
  std::vector<std::vector<double>> pts;
  for (double x : xs) pts.push_back({x});
  return PointConfiguration::validate(Space::unit_segment, std::move(pts));
}

// Four objects in two coinciding pairs with a common cross distance.
Eigen::MatrixXd two_pair_blocks(double cross) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(4, 4);
  for (int i : {0, 1}) {
    for (int j : {2, 3}) d(i, j) = d(j, i) = cross;
  }
  return d;
}

}  // namespace

MeasureValue evaluate_input(const MeasureHandle& m, const MatrixInput& input) {
  if (std::holds_alternative<DistanceMatrix>(input)) return m(std::get<DistanceMatrix>(input));
  return m(std::get<SimilarityMatrix>(input));
}

PointConfiguration four_per_corner_config() {
  std::vector<std::vector<double>> pts;
  for (auto [x, y] : {std::pair{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}}) {
    for (int r = 0; r < 4; ++r) pts.push_back({x, y});
  }
  return square_points(std::move(pts));
}

PointConfiguration grid_config() {
  std::vector<std::vector<double>> pts;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) pts.push_back({i / 3.0, j / 3.0});
  }
  return square_points(std::move(pts));
}

PointConfiguration two_corner_config() {
  std::vector<std::vector<double>> pts;
  for (int r = 0; r < 8; ++r) pts.push_back({0.0, 0.0});
  for (int r = 0; r < 8; ++r) pts.push_back({1.0, 1.0});
  return square_points(std::move(pts));
}

SimilarityMatrix circle_cosine(const std::vector<double>& angles) { return cosine_matrix(angles); }

std::vector<std::string> registry_case_ids() {
  return {"average-corners",    "diameter-corners",  "sum-diameter-max", "bottleneck-duplicate",
          "sum-bottleneck-15+1", "energy-duplicate",  "hamdiv-segments",  "vendi-monotonicity",
          "vendi-uniqueness",    "dpp-monotonicity",  "rke-uniqueness",   "species-q-scan",
          "sum-bottleneck-blocks", "diameter-triple", "circles-triple"};
}

RegistryCase registry_case(const std::string& id) {
  RegistryCase c;
  c.id = id;
  if (id == "average-corners") {
    c.claim = "Average is maximized by piling four duplicates on each square corner;"
              " the evenly spread grid scores lower.";
    c.values.push_back({"four duplicates per corner", make_measure("average"),
                        distances_from_points(four_per_corner_config()), 0.9105, 1e-3});
    c.values.push_back({"4x4 grid", make_measure("average"), distances_from_points(grid_config()),
                        0.71, 1e-2});
  } else if (id == "diameter-corners") {
    c.claim = "Once two opposite corners are occupied, Diameter ignores every other point.";
    c.values.push_back({"8+8 on opposite corners", make_measure("diameter"),
                        distances_from_points(two_corner_config()), 1.41, 5e-3});
  } else if (id == "sum-diameter-max") {
    c.claim = "SumDiameter is maximized by splitting all points across two opposite corners.";
    c.values.push_back({"8+8 on opposite corners", make_measure("sum_diameter"),
                        distances_from_points(two_corner_config()), 16.0 * std::numbers::sqrt2,
                        1e-9});
  } else if (id == "bottleneck-duplicate") {
    c.claim = "A single duplicate pair forces Bottleneck to zero regardless of the layout.";
    auto cfg = grid_config();
    cfg.points[1] = cfg.points[0];
    c.values.push_back({"grid with one duplicate", make_measure("bottleneck"),
                        distances_from_points(square_points(cfg.points)), 0.0, 1e-12});
  } else if (id == "sum-bottleneck-15+1") {
    c.claim = "Fifteen coinciding points and one outlier at distance r give SumBottleneck = r.";
    std::vector<std::vector<double>> pts(15, {0.0, 0.0});
    pts.push_back({0.1, 0.0});
    c.values.push_back({"15 coinciding + outlier at 0.1", make_measure("sum_bottleneck"),
                        distances_from_points(square_points(std::move(pts))), 0.1, 1e-9});
  } else if (id == "energy-duplicate") {
    c.claim = "Energy collapses to -inf whenever any two points coincide.";
    std::vector<std::vector<double>> pts(15, {0.0, 0.0});
    pts.push_back({0.1, 0.0});
    RegistryValueCheck check{"15 coinciding + outlier", make_measure("energy"),
                             distances_from_points(square_points(std::move(pts))), 0.0, 0.0};
    check.expect_neg_inf = true;
    c.values.push_back(std::move(check));
  } else if (id == "hamdiv-segments") {
    c.claim = "HamDiv rates the clumped segment 0,0,1,1 and the even 0,1/3,2/3,1 identically.";
    c.values.push_back({"segment 0,0,1,1", make_measure("ham_div"),
                        distances_from_points(segment_points({0, 0, 1, 1})), 2.0, 1e-9});
    c.values.push_back({"segment 0,1/3,2/3,1", make_measure("ham_div"),
                        distances_from_points(segment_points({0, 1.0 / 3, 2.0 / 3, 1})), 2.0, 1e-9});
  } else if (id == "vendi-monotonicity") {
    c.claim = "Moving the far point farther away decreases the Vendi Score.";
    c.values.push_back({"angles 0,0.6,2.0", make_measure("vendi"), circle_cosine({0, 0.6, 2.0}),
                        1.941, 5e-3});
    c.values.push_back({"angles 0,0.6,2.1", make_measure("vendi"), circle_cosine({0, 0.6, 2.1}),
                        1.916, 5e-3});
    c.orders.push_back({"farther apart scores lower", make_measure("vendi"),
                        circle_cosine({0, 0.6, 2.1}), circle_cosine({0, 0.6, 2.0})});
  } else if (id == "vendi-uniqueness") {
    c.claim = "Replacing a distinct point with an exact duplicate raises the Vendi Score.";
    c.values.push_back({"angles 0,0.2,0.5", make_measure("vendi"), circle_cosine({0, 0.2, 0.5}),
                        1.187, 5e-3});
    c.values.push_back({"angles 0,0,0.5", make_measure("vendi"), circle_cosine({0, 0, 0.5}),
                        1.233, 5e-3});
    c.orders.push_back({"no-duplicate collection scores lower", make_measure("vendi"),
                        circle_cosine({0, 0.2, 0.5}), circle_cosine({0, 0, 0.5})});
  } else if (id == "dpp-monotonicity") {
    c.claim = "Raising one similarity entry from 0.2 to 0.3 increases det(S).";
    Eigen::MatrixXd s(3, 3), sh(3, 3);
    s << 1, 0.2, 0.6, 0.2, 1, 0.7, 0.6, 0.7, 1;
    sh << 1, 0.3, 0.6, 0.3, 1, 0.7, 0.6, 0.7, 1;
    c.values.push_back({"s12 = 0.2", make_measure("dpp"), SimilarityMatrix::validate(s), 0.278, 1e-3});
    c.values.push_back({"s12 = 0.3", make_measure("dpp"), SimilarityMatrix::validate(sh), 0.312, 1e-3});
    c.orders.push_back({"less similar pair scores lower", make_measure("dpp"),
                        SimilarityMatrix::validate(s), SimilarityMatrix::validate(sh)});
  } else if (id == "rke-uniqueness") {
    c.claim = "Turning a distinct point into a duplicate raises RKE.";
    c.values.push_back({"angles 0,1.1,1.5", make_measure("rke"), circle_cosine({0, 1.1, 1.5}),
                        0.564, 5e-3});
    c.values.push_back({"angles 0,1.5,1.5", make_measure("rke"), circle_cosine({0, 1.5, 1.5}),
                        0.584, 5e-3});
    c.orders.push_back({"no-duplicate collection scores lower", make_measure("rke"),
                        circle_cosine({0, 1.1, 1.5}), circle_cosine({0, 1.5, 1.5})});
  } else if (id == "species-q-scan") {
    return species_scan_case(0.1);
  } else if (id == "sum-bottleneck-blocks") {
    c.claim = "With two coinciding pairs, growing every cross distance leaves SumBottleneck at 0.";
    c.values.push_back({"cross distance 1", make_measure("sum_bottleneck"), dist(two_pair_blocks(1.0)),
                        0.0, 1e-12});
    c.values.push_back({"cross distance 2", make_measure("sum_bottleneck"), dist(two_pair_blocks(2.0)),
                        0.0, 1e-12});
  } else if (id == "diameter-triple") {
    c.claim = "Growing the smallest of the distances 2,2,1 leaves Diameter unchanged.";
    c.values.push_back({"distances 2,2,1", make_measure("diameter"), dist(tri3(2, 2, 1)), 2.0, 1e-12});
    c.values.push_back({"distances 2,2,2", make_measure("diameter"), dist(tri3(2, 2, 2)), 2.0, 1e-12});
  } else if (id == "circles-triple") {
    c.claim = "Growing the middle of the distances 4,3,2 leaves #Circles unchanged.";
    c.values.push_back({"distances 4,3,2", make_measure("circles"), dist(tri3(4, 3, 2)), 3.0, 1e-12});
    c.values.push_back({"distances 4,4,2", make_measure("circles"), dist(tri3(4, 4, 2)), 3.0, 1e-12});
  } else {
    throw Error(Errc::unknown_case, "UnknownCase: " + id);
  }
  return c;
}

RegistryCase species_scan_case(double step) {
  if (!(step > 0.0) || step > 100.0) {
    throw Error(Errc::invalid_order, "scan step must be in (0, 100]");
  }
  RegistryCase c;
  c.id = "species-q-scan";
  c.claim = "For every scanned order q, the duplicate-bearing collection outscores the"
            " all-distinct one.";
  const long steps = std::lround(100.0 / step);
  for (long k = 0; k <= steps; ++k) {
    const double q = static_cast<double>(k) * step;
    if (std::abs(q - 1.0) < step / 2.0) continue;  // q = 1 undefined
    // Orderings are compared in log domain: near q = 1 the plain expression
    // exceeds the double range while log stays finite and order-equivalent.
    MeasureHandle h;
    h.name = "species";
    h.display = "log Species(" + std::to_string(q) + ")";
    h.kind = MeasureKind::similarity_based;
    h.params["q"] = q;
    const SpeciesOrder order(q);
    h.similarity_eval = [order](const SimilarityMatrix& s) { return species_log(s, order); };
    c.orders.push_back({"q = " + std::to_string(q), std::move(h), circle_cosine({0, 1.1, 1.5}),
                        circle_cosine({0, 1.5, 1.5})});
  }
  return c;
}

RegistryOutcome run_registry_case(const RegistryCase& c) {
  RegistryOutcome out;
  for (const auto& check : c.values) {
    ++out.checks;
    const MeasureValue v = evaluate_input(check.measure, check.input);
    bool ok;
    if (check.expect_neg_inf) {
      ok = is_neg_infinity(v);
    } else {
      ok = std::abs(v - check.expected) <= check.tol;
    }
    if (!ok) {
      out.passed = false;
      out.failures.push_back(c.id + "/" + check.label + ": got " + std::to_string(v) +
                             ", expected " +
                             (check.expect_neg_inf ? "-inf" : std::to_string(check.expected)));
    }
  }
  for (const auto& check : c.orders) {
    ++out.checks;
    const MeasureValue lo = evaluate_input(check.measure, check.lesser);
    const MeasureValue hi = evaluate_input(check.measure, check.greater);
    if (!(lo < hi)) {
      out.passed = false;
      out.failures.push_back(c.id + "/" + check.label + ": expected " + std::to_string(lo) +
                             " < " + std::to_string(hi));
    }
  }
  return out;
}

// ─── Targeted axiom witnesses ────────────────────────────────────────────────

namespace {

TargetedWitness dwitness(Eigen::MatrixXd a, Eigen::MatrixXd b, std::string note) {
  return {MeasureKind::distance_based, std::move(a), std::move(b), std::move(note)};
}

TargetedWitness switness(const std::vector<double>& a_angles, const std::vector<double>& b_angles,
                         std::string note) {
  return {MeasureKind::similarity_based, cosine_matrix(a_angles).data(),
          cosine_matrix(b_angles).data(), std::move(note)};
}

Eigen::MatrixXd replace_first_point(PointConfiguration cfg, std::vector<double> p) {
  cfg.points[0] = std::move(p);
  return distances_from_points(
             PointConfiguration::validate(cfg.space, std::move(cfg.points)))
      .data();
}

}  // namespace

std::vector<TargetedWitness> monotonicity_witnesses(const MeasureHandle& m) {
  const std::string& name = m.name;
  std::vector<TargetedWitness> out;
  if (name == "diameter" || name == "sum_diameter") {
    out.push_back(dwitness(tri3(2, 2, 2), tri3(2, 2, 1), "growing the smallest distance changes nothing"));
  } else if (name == "bottleneck" || name == "energy") {
    Eigen::MatrixXd b = tri3(0, 1, 1);
    Eigen::MatrixXd a = tri3(0, 2, 2);
    out.push_back(dwitness(a, b, "duplicate pair pins the value while other distances grow"));
  } else if (name == "sum_bottleneck") {
    out.push_back(dwitness(two_pair_blocks(2.0), two_pair_blocks(1.0),
                           "two coinciding pairs pin every row minimum at zero"));
  } else if (name == "circles") {
    out.push_back(dwitness(tri3(4, 4, 2), tri3(4, 3, 2), "no threshold is crossed by the increase"));
  } else if (name == "unique") {
    out.push_back(dwitness(tri3(2, 2, 3), tri3(1, 2, 3), "all elements already distinct"));
  } else if (name == "ham_div") {
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(4, 4);
    b(0, 1) = b(1, 2) = b(2, 3) = b(0, 3) = 1.0;
    b(0, 2) = b(1, 3) = 1.1;
    Eigen::MatrixXd a = b;
    a(0, 2) = 1.2;
    b = (b + Eigen::MatrixXd(b.transpose())).eval();
    a = (a + Eigen::MatrixXd(a.transpose())).eval();
    out.push_back(dwitness(a, b, "the increased diagonal is not on the shortest circuit"));
  } else if (name == "vendi") {
    out.push_back(switness({0, 0.6, 2.1}, {0, 0.6, 2.0}, "farther point lowers the score"));
  } else if (name == "dpp") {
    Eigen::MatrixXd s(3, 3), sh(3, 3);
    s << 1, 0.2, 0.6, 0.2, 1, 0.7, 0.6, 0.7, 1;
    sh << 1, 0.3, 0.6, 0.3, 1, 0.7, 0.6, 0.7, 1;
    out.push_back({MeasureKind::similarity_based, s, sh, "lower similarity lowers det(S)"});
  }
  return out;
}

std::vector<TargetedWitness> uniqueness_witnesses(const MeasureHandle& m) {
  const std::string& name = m.name;
  std::vector<TargetedWitness> out;
  if (name == "average" || name == "sum_average") {
    const auto b = four_per_corner_config();
    out.push_back(dwitness(replace_first_point(b, {0.5, 0.5}), distances_from_points(b).data(),
                           "removing a corner duplicate lowers the mean distance"));
  } else if (name == "diameter" || name == "sum_diameter") {
    const auto b = two_corner_config();
    out.push_back(dwitness(replace_first_point(b, {0.5, 0.5}), distances_from_points(b).data(),
                           "replacing a corner duplicate cannot raise the value"));
  } else if (name == "bottleneck" || name == "energy") {
    out.push_back(dwitness(tri3(1, 1, 0), Eigen::MatrixXd::Zero(3, 3),
                           "a duplicate pair remains after the replacement"));
  } else if (name == "sum_bottleneck") {
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(4, 4);
    for (int i : {0, 1, 2}) b(i, 3) = b(3, i) = 10.0;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(4, 4);
    a(0, 1) = a(1, 0) = a(0, 2) = a(2, 0) = 9.0;
    a(0, 3) = a(3, 0) = 1.0;
    a(1, 3) = a(3, 1) = a(2, 3) = a(3, 2) = 10.0;
    out.push_back(dwitness(a, b, "the fresh element sits near the far point and shrinks two row minima"));
  } else if (name == "circles") {
    const double t = m.params.count("t") ? m.params.at("t") : 1.0;
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(2, 2);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2, 2);
    a(0, 1) = a(1, 0) = t / 10.0;
    out.push_back(dwitness(a, b, "the fresh element is still within the threshold"));
  } else if (name == "ham_div") {
    const auto b = segment_points({1, 1, 1, 0});
    const auto a = segment_points({0.5, 1, 1, 0});
    out.push_back(dwitness(distances_from_points(a).data(), distances_from_points(b).data(),
                           "the shortest circuit length stays at twice the span"));
  } else if (name == "vendi") {
    out.push_back(switness({0, 0.2, 0.5}, {0, 0, 0.5}, "the duplicate collection scores higher"));
  } else if (name == "dpp") {
    out.push_back(switness({0.9, 0, 0}, {0, 0, 0}, "a duplicate pair keeps det(S) at zero"));
  } else if (name == "rke" || name == "species") {
    out.push_back(switness({0, 1.1, 1.5}, {0, 1.5, 1.5}, "the duplicate collection scores higher"));
  }
  return out;
}

std::vector<DistanceMatrix> continuity_witnesses(const MeasureHandle& m) {
  std::vector<DistanceMatrix> out;
  // Duplicate boundary: one coinciding pair.
  out.push_back(dist(tri3(0, 1, 1)));
  {
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(4, 4);
    d(0, 1) = d(1, 0) = 0.0;
    for (int i : {0, 1}) {
      for (int j : {2, 3}) d(i, j) = d(j, i) = (j == 2 ? 0.7 : 1.3);
    }
    d(2, 3) = d(3, 2) = 0.9;
    out.push_back(dist(d));
  }
  // Threshold boundary for thresholded measures: one distance exactly at t.
  if (auto it = m.params.find("t"); it != m.params.end()) {
    const double t = it->second;
    out.push_back(dist(tri3(t, 2 * t, 2 * t)));
  }
  return out;
}

// ─── Catalogued axiom pattern ────────────────────────────────────────────────

std::vector<ExpectedProperties> expected_properties() {
  return {
      {"average", true, false, true},
      {"sum_average", true, false, true},
      {"diameter", false, false, true},
      {"sum_diameter", false, false, true},
      {"bottleneck", false, false, true},
      {"sum_bottleneck", false, false, true},
      {"energy", false, false, true},
      {"circles", false, false, false},
      {"unique", false, true, false},
      {"ham_div", false, false, true},
      {"vendi", false, false, true},
      {"dpp", false, false, true},
      {"rke", true, false, true},
      {"species", true, false, true},
      {"multi_dim_volume", true, true, true},
      {"integral_max_clique", true, true, true},
  };
}

nlohmann::json expected_properties_json() {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : expected_properties()) {
    rows.push_back({{"measure", row.measure},
                    {"monotonicity", row.monotonicity},
                    {"uniqueness", row.uniqueness},
                    {"continuity", row.continuity}});
  }
  return rows;
}

bool matches_expected_properties(const PropertyMatrixReport& report,
                                 std::vector<std::string>* mismatches) {
  const auto expected = expected_properties();
  bool ok = true;
  for (const auto& row : report.rows) {
    const ExpectedProperties* exp = nullptr;
    for (const auto& e : expected) {
      if (e.measure == row.measure.name) {
        exp = &e;
        break;
      }
    }
    if (exp == nullptr) continue;  // measure outside the catalogued table
    auto compare = [&](bool expected_ok, const AxiomVerdict& verdict, const char* axiom) {
      const bool got_ok = !verdict.violated();
      if (got_ok != expected_ok) {
        ok = false;
        if (mismatches) {
          mismatches->push_back(row.measure.name + "/" + axiom + ": expected " +
                                (expected_ok ? "no violation" : "violation") + ", got " +
                                (got_ok ? "no violation" : "violation"));
        }
      }
    };
    compare(exp->monotonicity, row.monotonicity, "monotonicity");
    compare(exp->uniqueness, row.uniqueness, "uniqueness");
    compare(exp->continuity, row.continuity, "continuity");
  }
  return ok;
}

}  // namespace divlab
