#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "divlab/axioms.hpp"
#include "divlab/measures_hard.hpp"
#include "divlab/rng.hpp"
#include "oracles.hpp"

#include <cmath>
#include <sstream>

using namespace divlab;

namespace {

DistanceMatrix tri(double d12, double d13, double d23) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(3, 3);
  d(0, 1) = d(1, 0) = d12;
  d(0, 2) = d(2, 0) = d13;
  d(1, 2) = d(2, 1) = d23;
  return DistanceMatrix::validate(d);
}

DistanceMatrix segment(std::vector<double> xs) {
  std::vector<std::vector<double>> pts;
  for (double x : xs) pts.push_back({x});
  return distances_from_points(PointConfiguration::validate(Space::unit_segment, std::move(pts)));
}

Graph graph(int n, std::vector<std::pair<int, int>> edges) {
  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  return g;
}

}  // namespace

TEST_CASE("max clique basics") {
  auto complete = max_clique(
      ThresholdGraph::from_distances(tri(1, 2, 3), 0.0, ThresholdComparison::strict));
  CHECK(complete.size == 3);
  CHECK(complete.total_weight == doctest::Approx(6.0));
  CHECK(complete.members == std::vector<int>{0, 1, 2});

  // path graph 0-1-2 with unit weights; two maximum cliques of equal weight,
  // the lexicographically smaller member set wins
  auto path = max_clique(
      ThresholdGraph::from_distances(tri(1, 2, 1), 1.5, ThresholdComparison::non_strict));
  CHECK(path.size == 2);
  CHECK(path.members == std::vector<int>{0, 2});

  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(3, 3);
  d(0, 1) = d(1, 0) = 1.0;
  d(1, 2) = d(2, 1) = 1.0;
  d(0, 2) = d(2, 0) = 0.5;
  auto chain = max_clique(ThresholdGraph::from_distances(DistanceMatrix::validate(d), 0.9,
                                                         ThresholdComparison::non_strict));
  CHECK(chain.size == 2);
  CHECK(chain.total_weight == doctest::Approx(1.0));
  CHECK(chain.members == std::vector<int>{0, 1});

  // two disjoint triangles of equal size: the heavier one wins even though
  // the lighter one is lexicographically first
  Eigen::MatrixXd two = Eigen::MatrixXd::Zero(6, 6);
  auto edge = [&](int i, int j, double w) { two(i, j) = two(j, i) = w; };
  edge(0, 1, 1.0);
  edge(0, 2, 1.0);
  edge(1, 2, 1.0);
  edge(3, 4, 1.5);
  edge(3, 5, 1.5);
  edge(4, 5, 1.5);
  for (int i : {0, 1, 2}) {
    for (int j : {3, 4, 5}) edge(i, j, 0.1);
  }
  auto heavy = max_clique(ThresholdGraph::from_distances(DistanceMatrix::validate(two), 0.5,
                                                         ThresholdComparison::non_strict));
  CHECK(heavy.size == 3);
  CHECK(heavy.members == std::vector<int>{3, 4, 5});
  CHECK(heavy.total_weight == doctest::Approx(4.5));
}

TEST_CASE("max clique equals subset enumeration on random graphs") {
  Rng rng(2024);
  for (int seed_trial = 0; seed_trial < 20; ++seed_trial) {
    const int n = 10;
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        // threshold at 1: distance above 1 means edge with probability 1/2
        const double v = rng.coin() ? rng.uniform(1.01, 2.0) : rng.uniform(0.1, 0.99);
        d(i, j) = d(j, i) = v;
      }
    }
    auto dm = DistanceMatrix::validate(d);
    auto g = ThresholdGraph::from_distances(dm, 1.0, ThresholdComparison::strict);
    auto got = max_clique(g);
    auto expected = oracle::brute_clique(n, [&](int i, int j) { return d(i, j) > 1.0; }, d);
    CHECK(got.size == expected.size);
    CHECK(got.total_weight == doctest::Approx(expected.weight).epsilon(1e-12));
    CHECK(got.members == expected.members);
  }
}

TEST_CASE("circles") {
  CHECK(circles(segment({0, 0.5, 1}), 0.4) == 3.0);
  CHECK(circles(segment({0, 0.5, 1}), 0.6) == 2.0);
  CHECK(circles(segment({0, 0.5, 1}), 1.0) == 1.0);  // t >= diameter
  CHECK_THROWS_AS(circles(segment({0, 0.5, 1}), -1.0), Error);

  // non-increasing in t, and unchanged by increases that cross no threshold
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto d = random_distance_matrix(rng, 2 + rng.uniform_int(7), 0.3);
    double prev = d.size() + 1;
    for (double t : {0.0, 0.2, 0.5, 1.0, 1.7}) {
      const double c = circles(d, t);
      CHECK(c <= prev);
      prev = c;
    }
    const double t = 1.0;
    auto plan = random_plan(rng, d);
    bool crosses = false;
    for (const auto& delta : plan.deltas) {
      if (d(delta.i, delta.j) <= t && d(delta.i, delta.j) + delta.eps > t) crosses = true;
    }
    if (!plan.deltas.empty() && !crosses) {
      auto bumped = DistanceMatrix::validate(apply_plan(d, plan));
      CHECK(circles(bumped, t) == circles(d, t));
    }
  }
}

TEST_CASE("ham_div") {
  CHECK(ham_div(segment({0, 0, 1, 1})) == doctest::Approx(2.0));
  CHECK(ham_div(segment({0, 1.0 / 3, 2.0 / 3, 1})) == doctest::Approx(2.0));
  CHECK(ham_div(tri(1, 2, 3)) == doctest::Approx(6.0));

  try {
    ham_div(segment({0, 1}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::n_too_small);
  }
  try {
    ham_div(DistanceMatrix::validate(Eigen::MatrixXd::Zero(19, 19)));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::instance_too_large);
    CHECK(e.i == 19);
  }

  Rng rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    auto d = random_distance_matrix(rng, 3 + rng.uniform_int(6), 0.3);
    CHECK(ham_div(d) == doctest::Approx(oracle::brute_ham_div(d.data())).epsilon(1e-12));
  }
}

TEST_CASE("volume profile") {
  auto p = volume_profile(tri(1, 2, 3));
  CHECK(p.m(2) == doctest::Approx(3.0));
  CHECK(p.m(3) == doctest::Approx(6.0));

  auto with_dup = volume_profile(tri(0, 2, 2));
  CHECK(with_dup.m(2) == doctest::Approx(2.0));
  CHECK(with_dup.is_zero(3));
  CHECK(with_dup.m(3) == 0.0);

  Eigen::MatrixXd dup2 = Eigen::MatrixXd::Zero(2, 2);
  CHECK(volume_profile(DistanceMatrix::validate(dup2)).is_zero(2));
}

TEST_CASE("multi dim volume and the normalized variant") {
  CHECK(multi_dim_volume(tri(1, 2, 3)) == doctest::Approx(9.0));
  CHECK(multi_dim_volume(tri(0, 2, 2)) == doctest::Approx(2.0));
  CHECK(multi_dim_volume(DistanceMatrix::validate(Eigen::MatrixXd::Zero(4, 4))) == 0.0);

  CHECK(multi_dim_volume_normalized(tri(1, 2, 3)) ==
        doctest::Approx(3.0 + std::pow(6.0, 1.0 / 3.0)));
  Eigen::MatrixXd d2 = Eigen::MatrixXd::Zero(2, 2);
  d2(0, 1) = d2(1, 0) = 5.0;
  CHECK(multi_dim_volume_normalized(DistanceMatrix::validate(d2)) == doctest::Approx(5.0));
  CHECK(multi_dim_volume_normalized(DistanceMatrix::validate(Eigen::MatrixXd::Zero(3, 3))) == 0.0);
}

TEST_CASE("integral max clique") {
  CHECK(integral_max_clique(tri(1, 1, 1)) == doctest::Approx(3.0));
  CHECK(integral_max_clique(tri(0, 1, 1)) == doctest::Approx(1.0));
  Eigen::MatrixXd d2 = Eigen::MatrixXd::Zero(2, 2);
  d2(0, 1) = d2(1, 0) = 2.0;
  CHECK(integral_max_clique(DistanceMatrix::validate(d2)) == doctest::Approx(4.0));
  CHECK(integral_max_clique(DistanceMatrix::validate(Eigen::MatrixXd::Zero(3, 3))) == 0.0);

  // w_t never increases with t
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    auto d = random_distance_matrix(rng, 2 + rng.uniform_int(7), 0.3);
    double prev = std::numeric_limits<double>::infinity();
    for (double t : {0.1, 0.3, 0.8, 1.2, 1.9}) {
      const double w = clique_weight_at(d, t);
      CHECK(w <= prev + 1e-12);
      prev = w;
    }
  }
}

TEST_CASE("hard measures match subset enumeration oracles") {
  Rng rng(60);
  for (int trial = 0; trial < 25; ++trial) {
    auto d = random_distance_matrix(rng, 2 + rng.uniform_int(7), 0.4);
    const auto& raw = d.data();
    CHECK(multi_dim_volume(d) ==
          doctest::Approx(oracle::brute_multi_dim_volume(raw)).epsilon(1e-9));
    CHECK(multi_dim_volume_normalized(d) ==
          doctest::Approx(oracle::brute_multi_dim_volume_normalized(raw)).epsilon(1e-9));
    CHECK(integral_max_clique(d) ==
          doctest::Approx(oracle::brute_integral_max_clique(raw)).epsilon(1e-9));
    for (double t : {0.0, 0.3, 0.9, 1.5}) {
      CHECK(circles(d, t) == doctest::Approx(oracle::brute_circles(raw, t)));
    }
  }
}

TEST_CASE("instance limits") {
  Eigen::MatrixXd big = Eigen::MatrixXd::Zero(25, 25);
  for (int i = 0; i < 25; ++i) {
    for (int j = i + 1; j < 25; ++j) big(i, j) = big(j, i) = 1.0 + i + j;
  }
  auto d = DistanceMatrix::validate(big);
  CHECK_THROWS_AS(circles(d, 1.0), Error);
  CHECK_THROWS_AS(multi_dim_volume(d), Error);
  CHECK_THROWS_AS(integral_max_clique(d), Error);
}

TEST_CASE("edge list parsing") {
  std::istringstream in("4 3\n1 2\n2 3\n1 3\n");
  auto g = parse_edge_list(in);
  CHECK(g.n == 4);
  CHECK(g.edges.size() == 3);
  CHECK(g.adjacency_masks()[0] == 0b0110);

  std::istringstream bad("3 2\n1 5\n");
  CHECK_THROWS_AS(parse_edge_list(bad), Error);
  std::istringstream truncated("3 2\n1 2\n");
  CHECK_THROWS_AS(parse_edge_list(truncated), Error);
}

TEST_CASE("reduction instances") {
  auto triangle = graph(3, {{0, 1}, {1, 2}, {0, 2}});
  auto d = reduction_instance(triangle, ReductionScheme::imc);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(d(i, j) == (i == j ? 0.0 : 3.0));
  }

  auto empty = reduction_instance(graph(3, {}), ReductionScheme::imc);
  CHECK(empty(0, 1) == 2.0);
  CHECK(empty(1, 2) == 2.0);

  auto circles_d = reduction_instance(graph(4, {{0, 1}, {1, 2}, {0, 2}}), ReductionScheme::circles, 1.0);
  CHECK(circles_d(0, 1) == doctest::Approx(1.1));
  CHECK(circles_d(0, 3) == doctest::Approx(0.9));
  CHECK(circles(circles_d, 1.0) == 3.0);
}

TEST_CASE("clique size recovery") {
  auto triangle = reduction_instance(graph(3, {{0, 1}, {1, 2}, {0, 2}}), ReductionScheme::imc);
  CHECK(integral_max_clique(triangle) == doctest::Approx(27.0));
  CHECK(recover_clique_size(integral_max_clique(triangle), triangle) == 3);

  auto empty = reduction_instance(graph(3, {}), ReductionScheme::imc);
  CHECK(integral_max_clique(empty) == doctest::Approx(12.0));
  CHECK(recover_clique_size(integral_max_clique(empty), empty) == 1);

  auto plus_isolated = reduction_instance(graph(4, {{0, 1}, {1, 2}, {0, 2}}), ReductionScheme::imc);
  CHECK(recover_clique_size(integral_max_clique(plus_isolated), plus_isolated) == 3);
  CHECK_THROWS_AS(recover_clique_size(integral_max_clique(plus_isolated) + 1.0, plus_isolated),
                  Error);

  CHECK(largest_embedded_clique(volume_profile(triangle)) == 3);
  CHECK(largest_embedded_clique(volume_profile(empty)) == 1);
  CHECK(largest_embedded_clique(volume_profile(plus_isolated)) == 3);
}

TEST_CASE("reduction round trip on random graphs") {
  Rng rng(404);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 4 + rng.uniform_int(6);
    Graph g;
    g.n = n;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng.coin()) g.edges.emplace_back(i, j);
      }
    }
    const int expected = oracle::brute_graph_clique(n, g.adjacency_masks());
    auto d = reduction_instance(g, ReductionScheme::imc);
    CHECK(recover_clique_size(integral_max_clique(d), d) == expected);
    CHECK(largest_embedded_clique(volume_profile(d)) == expected);
    auto dc = reduction_instance(g, ReductionScheme::circles, 1.0);
    CHECK(static_cast<int>(circles(dc, 1.0)) == expected);
  }
}

TEST_CASE("duplicate placement invariance of the exact measures") {
  // multiplicities over fixed distinct base points never change the value
  Rng rng(88);
  for (int trial = 0; trial < 10; ++trial) {
    auto base = random_distance_matrix(rng, 3, 0.0);
    std::vector<std::vector<int>> layouts = {{3, 1, 1}, {1, 3, 1}, {1, 1, 3}, {2, 2, 1}, {1, 2, 2}};
    double mdv_first = 0.0, imc_first = 0.0;
    for (size_t l = 0; l < layouts.size(); ++l) {
      std::vector<int> cls;
      for (int c = 0; c < 3; ++c) cls.insert(cls.end(), layouts[l][c], c);
      const int n = static_cast<int>(cls.size());
      Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) d(i, j) = base(cls[i], cls[j]);
      }
      auto dm = DistanceMatrix::validate(d);
      const double mdv = multi_dim_volume(dm);
      const double imc = integral_max_clique(dm);
      if (l == 0) {
        mdv_first = mdv;
        imc_first = imc;
      } else {
        CHECK(mdv == doctest::Approx(mdv_first).epsilon(1e-12));
        CHECK(imc == doctest::Approx(imc_first).epsilon(1e-12));
      }
    }
  }
}
