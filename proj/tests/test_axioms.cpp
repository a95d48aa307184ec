#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "divlab/axioms.hpp"
#include "divlab/registry.hpp"
#include "divlab/rng.hpp"

#include <fstream>

using namespace divlab;

namespace {

MeasureValue replay(const MeasureHandle& m, const Eigen::MatrixXd& raw) {
  if (m.kind == MeasureKind::distance_based) return m(DistanceMatrix::validate(raw));
  return m(SimilarityMatrix::validate(raw));
}

// A violated verdict must reproduce bit for bit from its stored witness.
void check_replay(const MeasureHandle& m, const AxiomVerdict& v) {
  REQUIRE(v.violated());
  REQUIRE(v.witness.has_value());
  const Witness& w = *v.witness;
  const MeasureValue va = replay(m, w.a);
  const MeasureValue vb = replay(m, w.b);
  if (is_neg_infinity(w.value_a)) {
    CHECK(is_neg_infinity(va));
  } else {
    CHECK(va == w.value_a);
  }
  if (is_neg_infinity(w.value_b)) {
    CHECK(is_neg_infinity(vb));
  } else {
    CHECK(vb == w.value_b);
  }
}

}  // namespace

TEST_CASE("monotonicity checker") {
  auto diam = check_monotonicity(make_measure("diameter"), 100, 1);
  CHECK(diam.violated());
  CHECK(diam.witness->value_a == diam.witness->value_b);  // both 2
  check_replay(make_measure("diameter"), diam);

  auto avg = check_monotonicity(make_measure("average"), 1000, 2);
  CHECK_FALSE(avg.violated());
  CHECK(avg.probes == 1000);

  auto vendi = check_monotonicity(make_measure("vendi"), 100, 3);
  CHECK(vendi.violated());
  CHECK(vendi.kernel == "cosine_circle");
  CHECK(vendi.witness->value_b == doctest::Approx(1.941).epsilon(1e-3));
  CHECK(vendi.witness->value_a == doctest::Approx(1.916).epsilon(1e-3));

  CHECK(check_monotonicity(make_measure("energy"), 100, 4).violated());
  CHECK(check_monotonicity(make_measure("circles"), 100, 5).violated());
  CHECK(check_monotonicity(make_measure("unique"), 100, 6).violated());
  CHECK(check_monotonicity(make_measure("ham_div"), 100, 7).violated());
  CHECK(check_monotonicity(make_measure("dpp"), 100, 8).violated());

  CHECK_FALSE(check_monotonicity(make_measure("rke"), 500, 9).violated());
  CHECK_FALSE(check_monotonicity(make_measure("species"), 500, 10).violated());
  CHECK_FALSE(check_monotonicity(make_measure("multi_dim_volume"), 500, 11).violated());
  CHECK_FALSE(check_monotonicity(make_measure("integral_max_clique"), 500, 12).violated());
}

TEST_CASE("uniqueness checker") {
  auto energy = check_uniqueness(make_measure("energy"), 100, 1);
  CHECK(energy.violated());
  CHECK(is_neg_infinity(energy.witness->value_a));
  CHECK(is_neg_infinity(energy.witness->value_b));

  auto rke_verdict = check_uniqueness(make_measure("rke"), 100, 2);
  CHECK(rke_verdict.violated());
  CHECK(rke_verdict.witness->value_a == doctest::Approx(0.564).epsilon(1e-3));
  CHECK(rke_verdict.witness->value_b == doctest::Approx(0.584).epsilon(1e-3));
  check_replay(make_measure("rke"), rke_verdict);

  CHECK_FALSE(check_uniqueness(make_measure("multi_dim_volume"), 1000, 3).violated());
  CHECK_FALSE(check_uniqueness(make_measure("integral_max_clique"), 500, 4).violated());
  CHECK_FALSE(check_uniqueness(make_measure("unique"), 1000, 5).violated());

  CHECK(check_uniqueness(make_measure("average"), 100, 6).violated());
  CHECK(check_uniqueness(make_measure("diameter"), 100, 7).violated());
  CHECK(check_uniqueness(make_measure("sum_bottleneck"), 100, 8).violated());
  CHECK(check_uniqueness(make_measure("ham_div"), 100, 9).violated());
  CHECK(check_uniqueness(make_measure("vendi"), 100, 10).violated());
  CHECK(check_uniqueness(make_measure("species"), 100, 11).violated());
}

TEST_CASE("continuity checker") {
  auto unique_verdict = check_continuity(make_measure("unique"), 1);
  CHECK(unique_verdict.violated());
  // jump of 1/n when a duplicate pair splits
  CHECK(std::abs(unique_verdict.witness->value_a - unique_verdict.witness->value_b) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-6));

  auto circles_verdict = check_continuity(make_measure("circles"), 2);
  CHECK(circles_verdict.violated());
  CHECK(circles_verdict.witness->value_a - circles_verdict.witness->value_b ==
        doctest::Approx(1.0));  // the count jumps 2 -> 3

  CHECK_FALSE(check_continuity(make_measure("integral_max_clique"), 3).violated());
  CHECK_FALSE(check_continuity(make_measure("multi_dim_volume"), 4).violated());
  CHECK_FALSE(check_continuity(make_measure("energy"), 5).violated());
  CHECK_FALSE(check_continuity(make_measure("bottleneck"), 6).violated());
  CHECK_FALSE(check_continuity(make_measure("vendi"), 7).violated());
  CHECK_FALSE(check_continuity(make_measure("rke"), 8).violated());

  // the bounded-shift construction keeps monotonicity and uniqueness but
  // jumps at duplicate boundaries, which is exactly why continuity is needed
  CHECK(check_continuity(make_measure("unique_plus_bounded"), 9).violated());
  CHECK_FALSE(check_monotonicity(make_measure("unique_plus_bounded"), 300, 9).violated());
  CHECK_FALSE(check_uniqueness(make_measure("unique_plus_bounded"), 300, 9).violated());

  // explicit witness overload
  Eigen::MatrixXd dup = Eigen::MatrixXd::Zero(3, 3);
  dup(0, 2) = dup(2, 0) = dup(1, 2) = dup(2, 1) = 1.0;
  std::vector<DistanceMatrix> witnesses{DistanceMatrix::validate(dup)};
  CHECK(check_continuity(make_measure("unique"), witnesses, 10).violated());
  CHECK_THROWS_AS(check_continuity(make_measure("vendi"), witnesses, 11), Error);
}

TEST_CASE("duplicate placement invariance checker") {
  CHECK_FALSE(
      check_duplicate_placement_invariance(make_measure("multi_dim_volume"), 3, 5, 1).violated());
  CHECK_FALSE(
      check_duplicate_placement_invariance(make_measure("integral_max_clique"), 3, 6, 2).violated());
  auto avg = check_duplicate_placement_invariance(make_measure("average"), 2, 4, 3);
  CHECK(avg.violated());
  CHECK_THROWS_AS(check_duplicate_placement_invariance(make_measure("average"), 1, 4, 4), Error);
  CHECK_THROWS_AS(check_duplicate_placement_invariance(make_measure("average"), 4, 4, 5), Error);
}

TEST_CASE("average multiplicity example") {
  // two base points at distance 1: multiplicities (3,1) and (2,2)
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(4, 4);
  for (int i : {0, 1, 2}) a(i, 3) = a(3, i) = 1.0;
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(4, 4);
  for (int i : {0, 1}) {
    for (int j : {2, 3}) b(i, j) = b(j, i) = 1.0;
  }
  auto avg = make_measure("average");
  CHECK(avg(DistanceMatrix::validate(a)) == doctest::Approx(3.0 / 6.0));
  CHECK(avg(DistanceMatrix::validate(b)) == doctest::Approx(4.0 / 6.0));
}

TEST_CASE("registry cases") {
  auto dpp = registry_case("dpp-monotonicity");
  REQUIRE(dpp.values.size() == 2);
  CHECK(dpp.values[0].expected == doctest::Approx(0.278));
  CHECK(dpp.values[1].expected == doctest::Approx(0.312));
  CHECK(run_registry_case(dpp).passed);

  auto ham = registry_case("hamdiv-segments");
  CHECK(run_registry_case(ham).passed);
  auto corners = registry_case("average-corners");
  CHECK(run_registry_case(corners).passed);

  CHECK_THROWS_AS(registry_case("nonsense"), Error);

  for (const auto& id : registry_case_ids()) {
    auto outcome = run_registry_case(registry_case(id));
    INFO(id);
    CHECK(outcome.passed);
  }
}

TEST_CASE("sampled matrices and plans are always valid") {
  Rng rng(555);
  for (int trial = 0; trial < 300; ++trial) {
    auto d = random_distance_matrix(rng, 2 + rng.uniform_int(9), 0.6);
    auto plan = random_plan(rng, d);
    // both validations throw on any broken invariant
    if (!plan.deltas.empty()) {
      auto bumped = DistanceMatrix::validate(apply_plan(d, plan, rng.uniform(0.001, 1.0)));
      for (const auto& delta : plan.deltas) {
        CHECK(bumped(delta.i, delta.j) > d(delta.i, delta.j));
      }
    }
    auto [ua, ub] = random_uniqueness_pair(rng, 2 + rng.uniform_int(7));
    CHECK(duplicate_classes(ua).count() == duplicate_classes(ub).count() + 1);
  }
}

TEST_CASE("permutation invariance of every catalogued measure") {
  Rng rng(777);
  for (const auto& m : catalogued_measures()) {
    for (int trial = 0; trial < 10; ++trial) {
      const int lo = std::max(2, m.min_n);
      const int n = lo + rng.uniform_int(7 - lo + 1);
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i;
      for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform_int(i + 1)]);

      Eigen::MatrixXd raw;
      if (m.kind == MeasureKind::distance_based) {
        raw = random_distance_matrix(rng, n, 0.4).data();
      } else {
        raw = cosine_matrix(random_arc_angles(rng, n, 1.4, 0.4)).data();
      }
      Eigen::MatrixXd permuted(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) permuted(i, j) = raw(perm[i], perm[j]);
      }
      const MeasureValue v1 = replay(m, raw);
      const MeasureValue v2 = replay(m, permuted);
      INFO(m.name);
      if (is_neg_infinity(v1)) {
        CHECK(is_neg_infinity(v2));
      } else {
        CHECK(v2 == doctest::Approx(v1).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("property matrix subsets match the catalogued pattern") {
  std::vector<MeasureHandle> subset;
  for (const char* name : {"average", "diameter", "unique", "circles", "rke", "multi_dim_volume"}) {
    subset.push_back(make_measure(name));
  }
  auto report = property_matrix(subset, 120, 42);
  std::vector<std::string> mismatches;
  CHECK(matches_expected_properties(report, &mismatches));
  if (!mismatches.empty()) {
    for (const auto& m : mismatches) MESSAGE(m);
  }
  CHECK(format_property_table(report).find("Average") != std::string::npos);

  auto j = property_matrix_json(report);
  CHECK(j["rows"].size() == subset.size());
  CHECK(j["rows"][1]["monotonicity"]["outcome"] == "violated");
  CHECK(j["rows"][1]["monotonicity"]["witness"].contains("A"));
}

TEST_CASE("verdict json follows the documented schema") {
  auto v = check_monotonicity(make_measure("diameter"), 10, 1);
  auto j = verdict_to_json(v);
  CHECK(j["measure"] == "diameter");
  CHECK(j["axiom"] == "monotonicity");
  CHECK(j["outcome"] == "violated");
  CHECK(j["witness"]["valueA"].is_number());
  CHECK(j["budget"].is_number());
  CHECK(j["seed"].is_number());

  auto e = check_uniqueness(make_measure("energy"), 10, 1);
  CHECK(verdict_to_json(e)["witness"]["valueA"] == "-inf");
}

TEST_CASE("expectation file matches the built-in table") {
  std::ifstream in(std::string(DIVLAB_DATA_DIR) + "/expected_properties.json");
  REQUIRE(in.good());
  nlohmann::json file_json;
  in >> file_json;
  CHECK(file_json == expected_properties_json());
}
