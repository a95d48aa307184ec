#include "divlab/measures_hard.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace divlab {

namespace {

void require_size(int n, int n_max, const char* what) {
  if (n > n_max) {
    Error e(Errc::instance_too_large, std::string("InstanceTooLarge: ") + what + " with n=" +
                                          std::to_string(n) + " exceeds n_max=" + std::to_string(n_max));
    e.i = n;
    e.j = n_max;
    throw e;
  }
  if (n_max > 63) {
    throw Error(Errc::instance_too_large, "n_max beyond 63 is not supported");
  }
}

std::uint64_t bit(int v) { return std::uint64_t(1) << v; }

// Tomita-style branch and bound. Candidates that can still tie the incumbent
// size are explored, so among all maximum cliques the (weight, lex) choice is
// found exactly.
class CliqueSearch {
 public:
  explicit CliqueSearch(const ThresholdGraph& g) : g_(g) {}

  CliqueSolution run() {
    best_ = CliqueSolution{};
    current_.clear();
    current_weight_ = 0.0;
    std::uint64_t all = g_.n == 64 ? ~std::uint64_t(0) : bit(g_.n) - 1;
    expand(all);
    return best_;
  }

 private:
  void consider() {
    const int size = static_cast<int>(current_.size());
    if (size < best_.size) return;
    std::vector<int> sorted = current_;
    std::sort(sorted.begin(), sorted.end());
    bool better = false;
    if (size > best_.size) {
      better = true;
    } else if (current_weight_ > best_.total_weight) {
      better = true;
    } else if (current_weight_ == best_.total_weight &&
               std::lexicographical_compare(sorted.begin(), sorted.end(), best_.members.begin(),
                                            best_.members.end())) {
      better = true;
    }
    if (better) {
      best_.members = std::move(sorted);
      best_.size = size;
      best_.total_weight = current_weight_;
    }
  }

  void expand(std::uint64_t cand) {
    if (cand == 0) {
      consider();
      return;
    }
    // Greedy coloring of the candidate set; color c upper-bounds any clique
    // inside the first vertices up to that color class.
    std::vector<int> order;
    std::vector<int> color;
    order.reserve(std::popcount(cand));
    std::uint64_t uncolored = cand;
    int c = 0;
    while (uncolored) {
      ++c;
      std::uint64_t avail = uncolored;
      while (avail) {
        const int v = std::countr_zero(avail);
        avail &= ~(bit(v) | g_.adjacency[v]);
        uncolored &= ~bit(v);
        order.push_back(v);
        color.push_back(c);
      }
    }
    // Weight tier: when this subtree can at best tie the incumbent size,
    // completing with every candidate bounds the reachable weight; equal
    // weights must survive for the lex tie-break, so only strictly lighter
    // subtrees are cut.
    if (static_cast<int>(current_.size()) + c == best_.size &&
        current_weight_ + residual_weight(cand) < best_.total_weight) {
      return;
    }
    std::uint64_t remaining = cand;
    for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
      const int v = order[idx];
      if (static_cast<int>(current_.size()) + color[idx] < best_.size) return;
      remaining &= ~bit(v);
      double added = 0.0;
      for (int u : current_) added += g_.weights(u, v);
      current_.push_back(v);
      current_weight_ += added;
      expand(remaining & g_.adjacency[v]);
      current_.pop_back();
      current_weight_ -= added;
    }
  }

  // Upper bound on the edge weight any completion from `cand` can add: every
  // candidate-to-clique edge plus every edge inside the candidate set.
  double residual_weight(std::uint64_t cand) const {
    double total = 0.0;
    for (std::uint64_t rest = cand; rest;) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      for (int u : current_) total += g_.weights(u, v);
      for (std::uint64_t peers = rest & g_.adjacency[v]; peers;) {
        const int u = std::countr_zero(peers);
        peers &= peers - 1;
        total += g_.weights(u, v);
      }
    }
    return total;
  }

  const ThresholdGraph& g_;
  std::vector<int> current_;
  double current_weight_ = 0.0;
  CliqueSolution best_;
};

}  // namespace

ThresholdGraph ThresholdGraph::from_distances(const DistanceMatrix& d, double t,
                                              ThresholdComparison comparison, int n_max) {
  require_size(d.size(), n_max, "threshold graph");
  ThresholdGraph g;
  g.n = d.size();
  g.threshold = t;
  g.comparison = comparison;
  g.weights = d.data();
  g.adjacency.assign(g.n, 0);
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      const bool connected =
          comparison == ThresholdComparison::strict ? d(i, j) > t : d(i, j) >= t;
      if (connected) {
        g.adjacency[i] |= bit(j);
        g.adjacency[j] |= bit(i);
      }
    }
  }
  return g;
}

CliqueSolution max_clique(const ThresholdGraph& g) { return CliqueSearch(g).run(); }

double clique_weight_at(const DistanceMatrix& d, double t, int n_max) {
  return max_clique(ThresholdGraph::from_distances(d, t, ThresholdComparison::non_strict, n_max))
      .total_weight;
}

MeasureValue circles(const DistanceMatrix& d, double t, int n_max) {
  if (t < 0.0) {
    throw Error(Errc::invalid_order, "circles threshold must be nonnegative");
  }
  return max_clique(ThresholdGraph::from_distances(d, t, ThresholdComparison::strict, n_max)).size;
}

MeasureValue ham_div(const DistanceMatrix& d, int n_max) {
  const int n = d.size();
  if (n < 3) {
    Error e(Errc::n_too_small, "NTooSmall: Hamiltonian circuit needs n >= 3");
    e.i = n;
    throw e;
  }
  require_size(n, std::min(n_max, kHeldKarpLimit), "ham_div");
  // Held-Karp over subsets of vertices 1..n-1 with fixed start 0.
  const int m = n - 1;
  const std::size_t full = std::size_t(1) << m;
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dp(full * m, inf);
  for (int j = 0; j < m; ++j) dp[(std::size_t(1) << j) * m + j] = d(0, j + 1);
  for (std::size_t mask = 1; mask < full; ++mask) {
    for (int j = 0; j < m; ++j) {
      if (!((mask >> j) & 1)) continue;
      const double base = dp[mask * m + j];
      if (base == inf) continue;
      for (int k = 0; k < m; ++k) {
        if ((mask >> k) & 1) continue;
        const std::size_t next = mask | (std::size_t(1) << k);
        double& slot = dp[next * m + k];
        const double cost = base + d(j + 1, k + 1);
        if (cost < slot) slot = cost;
      }
    }
  }
  double best = inf;
  for (int j = 0; j < m; ++j) {
    best = std::min(best, dp[(full - 1) * m + j] + d(j + 1, 0));
  }
  return best;
}

double VolumeProfile::m(int k) const { return zero[k - 2] ? 0.0 : std::exp(log_m[k - 2]); }

double VolumeProfile::log_value(int k) const {
  return zero[k - 2] ? -std::numeric_limits<double>::infinity() : log_m[k - 2];
}

namespace {

// Maximizes sum of pairwise log distances over subsets of class
// representatives, per subset size. Within-class duplicates zero any product,
// so only representatives matter and the search space is 2^(#classes).
class ProfileSearch {
 public:
  ProfileSearch(const DistanceMatrix& d, const std::vector<int>& reps) : reps_(reps) {
    const int c = static_cast<int>(reps.size());
    log_d_.resize(c, std::vector<double>(c, 0.0));
    for (int a = 0; a < c; ++a) {
      for (int b = a + 1; b < c; ++b) {
        log_d_[a][b] = log_d_[b][a] = std::log(d(reps[a], reps[b]));
      }
    }
    best_.assign(c + 1, -std::numeric_limits<double>::infinity());
    best_[0] = 0.0;
  }

  std::vector<double> run() {
    chosen_.clear();
    dfs(0, 0.0);
    return best_;
  }

 private:
  void dfs(int idx, double log_sum) {
    best_[chosen_.size()] = std::max(best_[chosen_.size()], log_sum);
    if (idx == static_cast<int>(reps_.size())) return;
    double added = 0.0;
    for (int a : chosen_) added += log_d_[a][idx];
    chosen_.push_back(idx);
    dfs(idx + 1, log_sum + added);
    chosen_.pop_back();
    dfs(idx + 1, log_sum);
  }

  const std::vector<int>& reps_;
  std::vector<std::vector<double>> log_d_;
  std::vector<int> chosen_;
  std::vector<double> best_;
};

}  // namespace

VolumeProfile volume_profile(const DistanceMatrix& d, int n_max) {
  require_size(d.size(), n_max, "volume profile");
  const int n = d.size();
  const auto classes = duplicate_classes(d);
  const auto reps = classes.representatives();
  const int c = classes.count();

  VolumeProfile profile;
  profile.n = n;
  profile.class_count = c;
  if (n < 2) return profile;
  profile.zero.assign(n - 1, true);
  profile.log_m.assign(n - 1, 0.0);

  const std::vector<double> best = ProfileSearch(d, reps).run();
  for (int k = 2; k <= std::min(n, c); ++k) {
    profile.zero[k - 2] = false;
    profile.log_m[k - 2] = best[k];
  }
  return profile;
}

MeasureValue multi_dim_volume(const DistanceMatrix& d, int n_max) {
  const VolumeProfile profile = volume_profile(d, n_max);
  double total = 0.0;
  for (int k = 2; k <= profile.n; ++k) total += profile.m(k);
  return total;
}

MeasureValue multi_dim_volume_normalized(const DistanceMatrix& d, int n_max) {
  const VolumeProfile profile = volume_profile(d, n_max);
  double total = 0.0;
  for (int k = 2; k <= profile.n; ++k) {
    if (profile.is_zero(k)) continue;
    total += std::exp(profile.log_value(k) * 2.0 / (double(k) * (k - 1)));
  }
  return total;
}

MeasureValue integral_max_clique(const DistanceMatrix& d, int n_max) {
  require_size(d.size(), n_max, "integral max clique");
  std::set<double> values;
  for (int i = 0; i < d.size(); ++i) {
    for (int j = i + 1; j < d.size(); ++j) {
      if (d(i, j) > 0.0) values.insert(d(i, j));
    }
  }
  double total = 0.0;
  double prev = 0.0;
  for (double v : values) {
    total += (v - prev) * clique_weight_at(d, v, n_max);
    prev = v;
  }
  return total;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  std::vector<std::uint64_t> adj(n, 0);
  for (auto [u, v] : edges) {
    adj[u] |= bit(v);
    adj[v] |= bit(u);
  }
  return adj;
}

Graph parse_edge_list(std::istream& in) {
  Graph g;
  int m = 0;
  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) {
    throw Error(Errc::parse_error, "ParseError(1): missing header line");
  }
  ++line_no;
  {
    std::istringstream ss(line);
    if (!(ss >> g.n >> m) || g.n < 1 || m < 0) {
      throw Error(Errc::parse_error, "ParseError(1): expected 'n m'");
    }
  }
  std::set<std::pair<int, int>> seen;
  while (static_cast<int>(g.edges.size()) < m) {
    if (!std::getline(in, line)) {
      Error e(Errc::parse_error,
              "ParseError(" + std::to_string(line_no + 1) + "): expected " + std::to_string(m) +
                  " edges, got " + std::to_string(g.edges.size()));
      e.i = line_no + 1;
      throw e;
    }
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ss(line);
    int u = 0, v = 0;
    if (!(ss >> u >> v) || u < 1 || v < 1 || u > g.n || v > g.n || u == v) {
      Error e(Errc::parse_error, "ParseError(" + std::to_string(line_no) + "): bad edge '" + line + "'");
      e.i = line_no;
      throw e;
    }
    const std::pair<int, int> key{std::min(u, v) - 1, std::max(u, v) - 1};
    if (seen.insert(key).second) g.edges.emplace_back(key.first, key.second);
  }
  return g;
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::parse_error, "cannot open " + path);
  }
  return parse_edge_list(in);
}

DistanceMatrix reduction_instance(const Graph& g, ReductionScheme scheme, double t) {
  const auto adj = g.adjacency_masks();
  double on = 3.0, off = 2.0;
  if (scheme == ReductionScheme::circles) {
    on = 1.1 * t;
    off = 0.9 * t;
  }
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(g.n, g.n);
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      const double v = ((adj[i] >> j) & 1u) ? on : off;
      d(i, j) = v;
      d(j, i) = v;
    }
  }
  return DistanceMatrix::validate(std::move(d));
}

int recover_clique_size(double div_value, const DistanceMatrix& d) {
  double sum = 0.0;
  for (int i = 0; i < d.size(); ++i) {
    for (int j = i + 1; j < d.size(); ++j) sum += d(i, j);
  }
  // div = 2*sum + 3*s(s-1)/2
  const double x = (div_value - 2.0 * sum) * 2.0 / 3.0;
  const double s_real = (1.0 + std::sqrt(1.0 + 4.0 * std::max(x, 0.0))) / 2.0;
  const int s = static_cast<int>(std::lround(s_real));
  if (s < 1 || std::abs(double(s) * (s - 1) - x) > 1e-6 * std::max(1.0, std::abs(x))) {
    Error e(Errc::no_integer_solution,
            "NoIntegerSolution: s(s-1)=" + std::to_string(x) + " has no integer root");
    e.detail = x;
    throw e;
  }
  return s;
}

int largest_embedded_clique(const VolumeProfile& profile) {
  const double log3 = std::log(3.0);
  for (int k = profile.n; k >= 2; --k) {
    if (profile.is_zero(k)) continue;
    const double target = log3 * double(k) * (k - 1) / 2.0;
    if (std::abs(profile.log_value(k) - target) <= 1e-9 * std::max(1.0, target)) return k;
  }
  return 1;
}

}  // namespace divlab
