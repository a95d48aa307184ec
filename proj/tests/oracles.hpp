#pragma once

// Brute-force reference implementations used only by tests. They avoid the
// library's solver paths on purpose: cliques come from 2^n subset
// enumeration, tours from permutations, and subset products from direct
// log sums over all index subsets.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct BruteClique {
  int size = 0;
  double weight = 0.0;
  std::vector<int> members;
};

// Exact (size, weight, lex) optimum by full subset enumeration.
template <typename EdgeFn>
BruteClique brute_clique(int n, EdgeFn edge, const Eigen::MatrixXd& weights) {
  BruteClique best;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1) members.push_back(v);
    }
    bool clique = true;
    double weight = 0.0;
    for (size_t a = 0; a < members.size() && clique; ++a) {
      for (size_t b = a + 1; b < members.size(); ++b) {
        if (!edge(members[a], members[b])) {
          clique = false;
          break;
        }
        weight += weights(members[a], members[b]);
      }
    }
    if (!clique) continue;
    const int size = static_cast<int>(members.size());
    const bool better =
        size > best.size ||
        (size == best.size &&
         (weight > best.weight ||
          (weight == best.weight && std::lexicographical_compare(members.begin(), members.end(),
                                                                 best.members.begin(),
                                                                 best.members.end()))));
    if (better) best = {size, weight, std::move(members)};
  }
  return best;
}

// log of m_k over all size-k subsets of all n indices; kNegInf when every
// size-k subset contains a zero distance.
inline double brute_m_k_log(const Eigen::MatrixXd& d, int k) {
  const int n = static_cast<int>(d.rows());
  double best = kNegInf;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<int> members;
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1) members.push_back(v);
    }
    double log_sum = 0.0;
    bool zero = false;
    for (size_t a = 0; a < members.size() && !zero; ++a) {
      for (size_t b = a + 1; b < members.size(); ++b) {
        if (d(members[a], members[b]) == 0.0) {
          zero = true;
          break;
        }
        log_sum += std::log(d(members[a], members[b]));
      }
    }
    if (!zero) best = std::max(best, log_sum);
  }
  return best;
}

inline double brute_multi_dim_volume(const Eigen::MatrixXd& d) {
  const int n = static_cast<int>(d.rows());
  double total = 0.0;
  for (int k = 2; k <= n; ++k) {
    const double log_m = brute_m_k_log(d, k);
    if (log_m != kNegInf) total += std::exp(log_m);
  }
  return total;
}

inline double brute_multi_dim_volume_normalized(const Eigen::MatrixXd& d) {
  const int n = static_cast<int>(d.rows());
  double total = 0.0;
  for (int k = 2; k <= n; ++k) {
    const double log_m = brute_m_k_log(d, k);
    if (log_m != kNegInf) total += std::exp(log_m * 2.0 / (double(k) * (k - 1)));
  }
  return total;
}

inline int brute_circles(const Eigen::MatrixXd& d, double t) {
  const int n = static_cast<int>(d.rows());
  return brute_clique(n, [&](int i, int j) { return d(i, j) > t; }, d).size;
}

inline double brute_w_t(const Eigen::MatrixXd& d, double t) {
  const int n = static_cast<int>(d.rows());
  return brute_clique(n, [&](int i, int j) { return d(i, j) >= t; }, d).weight;
}

inline double brute_integral_max_clique(const Eigen::MatrixXd& d) {
  const int n = static_cast<int>(d.rows());
  std::set<double> values;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (d(i, j) > 0.0) values.insert(d(i, j));
    }
  }
  double total = 0.0;
  double prev = 0.0;
  for (double v : values) {
    total += (v - prev) * brute_w_t(d, v);
    prev = v;
  }
  return total;
}

// Shortest closed tour by checking every permutation with vertex 0 fixed.
inline double brute_ham_div(const Eigen::MatrixXd& d) {
  const int n = static_cast<int>(d.rows());
  std::vector<int> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);
  double best = std::numeric_limits<double>::infinity();
  do {
    double len = d(0, perm.front()) + d(perm.back(), 0);
    for (int i = 0; i + 1 < n - 1; ++i) len += d(perm[i], perm[i + 1]);
    best = std::min(best, len);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Largest clique of a plain graph given as adjacency masks.
inline int brute_graph_clique(int n, const std::vector<std::uint64_t>& adj) {
  int best = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    bool clique = true;
    for (int a = 0; a < n && clique; ++a) {
      if (!((mask >> a) & 1)) continue;
      for (int b = a + 1; b < n; ++b) {
        if (((mask >> b) & 1) && !((adj[a] >> b) & 1)) {
          clique = false;
          break;
        }
      }
    }
    if (clique) best = std::max(best, std::popcount(mask));
  }
  return best;
}

// Closed-form eigenvalues of a symmetric 3x3 matrix (trigonometric method),
// ascending. Independent of any iterative eigensolver.
inline std::array<double, 3> sym3_eigenvalues(const Eigen::Matrix3d& a) {
  const double p1 = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
  if (p1 == 0.0) {
    std::array<double, 3> diag{a(0, 0), a(1, 1), a(2, 2)};
    std::sort(diag.begin(), diag.end());
    return diag;
  }
  const double q = a.trace() / 3.0;
  const double p2 = (a(0, 0) - q) * (a(0, 0) - q) + (a(1, 1) - q) * (a(1, 1) - q) +
                    (a(2, 2) - q) * (a(2, 2) - q) + 2.0 * p1;
  const double p = std::sqrt(p2 / 6.0);
  Eigen::Matrix3d b = (a - q * Eigen::Matrix3d::Identity()) / p;
  double r = b.determinant() / 2.0;
  r = std::clamp(r, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  const double e1 = q + 2.0 * p * std::cos(phi);
  const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
  const double e2 = 3.0 * q - e1 - e3;
  std::array<double, 3> out{e3, e2, e1};
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
