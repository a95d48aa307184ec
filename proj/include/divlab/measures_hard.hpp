#pragma once

#include "divlab/core.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace divlab {

// Exact solvers only; instances beyond these limits are rejected rather than
// approximated.
inline constexpr int kDefaultCliqueLimit = 24;
inline constexpr int kHeldKarpLimit = 18;

// ─── Threshold graphs and cliques ────────────────────────────────────────────

enum class ThresholdComparison { strict, non_strict };

// Graph over the collection at threshold t: strict puts an edge iff d_ij > t
// (#Circles), non_strict iff d_ij >= t (IntegralMaxClique). Edge weights are
// the distances themselves.
struct ThresholdGraph {
  int n = 0;
  double threshold = 0.0;
  ThresholdComparison comparison = ThresholdComparison::strict;
  std::vector<std::uint64_t> adjacency;  // neighbor bitmask per vertex
  Eigen::MatrixXd weights;

  static ThresholdGraph from_distances(const DistanceMatrix& d, double t,
                                       ThresholdComparison comparison,
                                       int n_max = kDefaultCliqueLimit);
  bool edge(int i, int j) const { return (adjacency[i] >> j) & 1u; }
};

struct CliqueSolution {
  std::vector<int> members;  // ascending
  int size = 0;
  double total_weight = 0.0;
};

// Exact maximum-cardinality clique; ties broken by maximum total edge weight,
// then by lexicographically smallest member set. Branch and bound with a
// greedy-coloring bound; branches that can still tie the incumbent size are
// never pruned, so the weight/lex selection is exact.
CliqueSolution max_clique(const ThresholdGraph& g);

// w_t(X): total edge weight of the chosen clique of the non-strict graph at t.
double clique_weight_at(const DistanceMatrix& d, double t, int n_max = kDefaultCliqueLimit);

// ─── NP-hard measures ────────────────────────────────────────────────────────

// #Circles(t): largest subset with all pairwise distances strictly above t.
MeasureValue circles(const DistanceMatrix& d, double t, int n_max = kDefaultCliqueLimit);

// Length of the shortest Hamiltonian circuit (Held-Karp, O(n^2 2^n)).
MeasureValue ham_div(const DistanceMatrix& d, int n_max = kHeldKarpLimit);

// m_k(X) = max over size-k submultisets of the product of pairwise distances,
// for k = 2..n. Kept in log domain; m_k = 0 exactly when k exceeds the number
// of duplicate classes.
struct VolumeProfile {
  int n = 0;
  int class_count = 0;
  std::vector<bool> zero;      // index k-2
  std::vector<double> log_m;   // index k-2, valid when !zero

  double m(int k) const;
  double log_value(int k) const;
  bool is_zero(int k) const { return zero[k - 2]; }
};

VolumeProfile volume_profile(const DistanceMatrix& d, int n_max = kDefaultCliqueLimit);

// sum_k m_k(X)
MeasureValue multi_dim_volume(const DistanceMatrix& d, int n_max = kDefaultCliqueLimit);

// sum_k m_k(X)^(2/(k(k-1))), the geometric-mean variant; 0^x = 0.
MeasureValue multi_dim_volume_normalized(const DistanceMatrix& d, int n_max = kDefaultCliqueLimit);

// Integral of w_t over t, evaluated exactly: w is piecewise constant between
// consecutive distinct distance values, with right-closed pieces because the
// edge rule is d_ij >= t.
MeasureValue integral_max_clique(const DistanceMatrix& d, int n_max = kDefaultCliqueLimit);

// ─── Clique-reduction constructions ──────────────────────────────────────────

// Simple undirected graph for the reductions; vertices 0..n-1.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<std::uint64_t> adjacency_masks() const;
};

// Edge-list file: first line "n m", then m lines "u v" (1-based).
Graph load_edge_list(const std::string& path);
Graph parse_edge_list(std::istream& in);

enum class ReductionScheme { circles, mdv, imc };

// Distance matrix embedding a max-clique instance: mdv/imc map edges to
// distance 3 and non-edges to 2; circles maps edges to 1.1*t and non-edges to
// 0.9*t (the strict d_ij > t rule needs edges strictly above the threshold).
DistanceMatrix reduction_instance(const Graph& g, ReductionScheme scheme, double t = 1.0);

// Inverts div = 2*sum(d) + 3*s(s-1)/2 for an imc reduction instance; the
// result must land on an integer or the computation is wrong.
int recover_clique_size(double div_value, const DistanceMatrix& d);

// Largest k with m_k = 3^(k(k-1)/2), compared in log domain; equals the
// clique number of the graph behind an mdv reduction instance.
int largest_embedded_clique(const VolumeProfile& profile);

}  // namespace divlab
