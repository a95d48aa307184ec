#include "divlab/axioms.hpp"

#include "divlab/io.hpp"
#include "divlab/registry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace divlab {

namespace {

constexpr int kContinuitySteps = 20;

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  return z ^ (z >> 31);
}

nlohmann::json matrix_to_json(const Eigen::MatrixXd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

MeasureValue eval_matrix(const MeasureHandle& m, const Eigen::MatrixXd& raw) {
  if (m.kind == MeasureKind::distance_based) {
    return m(DistanceMatrix::validate(raw));
  }
  return m(SimilarityMatrix::validate(raw));
}

int sample_n(Rng& rng, const MeasureHandle& m, int n_hi = 8) {
  const int lo = std::max(2, m.min_n);
  return lo + rng.uniform_int(n_hi - lo + 1);
}

}  // namespace

std::string axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::monotonicity: return "monotonicity";
    case Axiom::uniqueness: return "uniqueness";
    case Axiom::continuity: return "continuity";
    case Axiom::duplicate_placement: return "duplicate_placement";
  }
  return "monotonicity";
}

nlohmann::json verdict_to_json(const AxiomVerdict& v) {
  nlohmann::json j;
  j["measure"] = v.measure;
  j["axiom"] = axiom_name(v.axiom);
  j["outcome"] = v.violated() ? "violated" : "no_violation_found";
  j["budget"] = v.probes;
  j["inconclusive"] = v.inconclusive;
  j["seed"] = v.seed;
  if (!v.kernel.empty()) j["kernel"] = v.kernel;
  if (v.witness) {
    nlohmann::json w;
    w["kind"] = v.witness->kind == MeasureKind::distance_based ? "distance" : "similarity";
    w["A"] = matrix_to_json(v.witness->a);
    w["B"] = matrix_to_json(v.witness->b);
    w["valueA"] = value_to_json(v.witness->value_a);
    w["valueB"] = value_to_json(v.witness->value_b);
    w["note"] = v.witness->note;
    j["witness"] = std::move(w);
  }
  return j;
}

// ─── Perturbation plans ──────────────────────────────────────────────────────

Eigen::MatrixXd apply_plan(const DistanceMatrix& base, const PerturbationPlan& plan, double scale) {
  Eigen::MatrixXd out = base.data();
  for (const auto& delta : plan.deltas) {
    out(delta.i, delta.j) += delta.eps * scale;
    out(delta.j, delta.i) = out(delta.i, delta.j);
  }
  return out;
}

PerturbationPlan between_class_plan(const DuplicateClasses& classes, int a, int b, double eps) {
  PerturbationPlan plan;
  for (int p : classes.classes[a]) {
    for (int q : classes.classes[b]) plan.deltas.push_back({p, q, eps});
  }
  return plan;
}

PerturbationPlan split_plan(const DuplicateClasses& classes, int member, double eps) {
  PerturbationPlan plan;
  const auto& cls = classes.classes[classes.class_of[member]];
  for (int other : cls) {
    if (other != member) plan.deltas.push_back({member, other, eps});
  }
  return plan;
}

PerturbationPlan random_plan(Rng& rng, const DistanceMatrix& base) {
  const auto classes = duplicate_classes(base);
  std::vector<int> splittable;
  for (int c = 0; c < classes.count(); ++c) {
    if (classes.classes[c].size() >= 2) splittable.push_back(c);
  }
  const int parts = 1 + rng.uniform_int(3);
  std::map<std::pair<int, int>, double> merged;
  for (int p = 0; p < parts; ++p) {
    PerturbationPlan sub;
    const bool can_split = !splittable.empty();
    const bool can_cross = classes.count() >= 2;
    const double eps = rng.uniform(0.05, 0.5);
    if (can_split && (!can_cross || rng.coin())) {
      const int c = splittable[rng.uniform_int(static_cast<int>(splittable.size()))];
      const auto& cls = classes.classes[c];
      sub = split_plan(classes, cls[rng.uniform_int(static_cast<int>(cls.size()))], eps);
    } else if (can_cross) {
      int a = rng.uniform_int(classes.count());
      int b = rng.uniform_int(classes.count() - 1);
      if (b >= a) ++b;
      sub = between_class_plan(classes, a, b, eps);
    }
    for (const auto& d : sub.deltas) {
      merged[std::minmax(d.i, d.j)] += d.eps;
    }
  }
  PerturbationPlan plan;
  for (const auto& [key, eps] : merged) plan.deltas.push_back({key.first, key.second, eps});
  return plan;
}

// ─── Random inputs ───────────────────────────────────────────────────────────

DistanceMatrix random_distance_matrix(Rng& rng, int n, double duplicate_prob) {
  int c = n;
  if (n >= 2 && rng.uniform() < duplicate_prob) c = 1 + rng.uniform_int(n - 1);
  std::vector<int> cls(n);
  for (int i = 0; i < n; ++i) cls[i] = i < c ? i : rng.uniform_int(c);
  for (int i = n - 1; i > 0; --i) std::swap(cls[i], cls[rng.uniform_int(i + 1)]);

  Eigen::MatrixXd class_d = Eigen::MatrixXd::Zero(c, c);
  for (int a = 0; a < c; ++a) {
    for (int b = a + 1; b < c; ++b) {
      class_d(a, b) = class_d(b, a) = rng.uniform(0.1, 2.0);
    }
  }
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) d(i, j) = class_d(cls[i], cls[j]);
  }
  return DistanceMatrix::validate(std::move(d));
}

std::vector<double> random_arc_angles(Rng& rng, int n, double arc, double duplicate_prob) {
  std::vector<double> angles(n);
  for (int i = 0; i < n; ++i) angles[i] = rng.uniform(0.0, arc);
  if (n >= 2 && rng.uniform() < duplicate_prob) {
    const int i = rng.uniform_int(n);
    int j = rng.uniform_int(n - 1);
    if (j >= i) ++j;
    angles[i] = angles[j];
  }
  return angles;
}

SimilarityMatrix cosine_matrix(const std::vector<double>& angles) {
  std::vector<std::vector<double>> pts;
  pts.reserve(angles.size());
  for (double a : angles) pts.push_back({a});
  return cosine_similarity_from_angles(PointConfiguration::validate(Space::unit_circle, std::move(pts)));
}

std::pair<DistanceMatrix, DistanceMatrix> random_uniqueness_pair(Rng& rng, int n) {
  // Elements 1..n-1 are shared; element 0 is a duplicate of element 1 in B and
  // a fresh element in A. Fresh distances are assigned per duplicate class of
  // the shared part so condition 2 keeps holding.
  const DistanceMatrix rest = random_distance_matrix(rng, n - 1, 0.4);
  const auto rest_classes = duplicate_classes(rest);
  std::vector<double> fresh(rest_classes.count());
  for (double& f : fresh) f = rng.uniform(0.1, 2.0);

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      a(i, j) = rest(i - 1, j - 1);
      b(i, j) = rest(i - 1, j - 1);
    }
  }
  for (int j = 1; j < n; ++j) {
    b(0, j) = b(j, 0) = rest(0, j - 1);
    a(0, j) = a(j, 0) = fresh[rest_classes.class_of[j - 1]];
  }
  return {DistanceMatrix::validate(std::move(a)), DistanceMatrix::validate(std::move(b))};
}

// ─── Monotonicity ────────────────────────────────────────────────────────────

namespace {

struct ProbeState {
  AxiomVerdict verdict;

  // Returns true when the probe produced a witness.
  bool probe(const MeasureHandle& m, MeasureKind kind, const Eigen::MatrixXd& a,
             const Eigen::MatrixXd& b, const std::string& note) {
    ++verdict.probes;
    const double va = eval_matrix(m, a);
    const double vb = eval_matrix(m, b);
    if (!(va > vb)) {
      verdict.outcome = Verdict::violated;
      verdict.witness = Witness{kind, a, b, va, vb, note};
      return true;
    }
    if (va <= vb + kStrictMargin) ++verdict.inconclusive;
    return false;
  }
};

// Moves the farthest-along point outward so every distance to it grows while
// all cosines stay in [0, 1] (the regime where RKE and Species are monotone).
std::vector<double> monotone_outward_move(Rng& rng, const std::vector<double>& angles) {
  std::vector<double> moved = angles;
  const int idx = static_cast<int>(std::max_element(moved.begin(), moved.end()) - moved.begin());
  const double room = std::numbers::pi / 2.0 - moved[idx];
  moved[idx] += rng.uniform(0.25 * room, 0.75 * room);
  return moved;
}

}  // namespace

AxiomVerdict check_monotonicity(const MeasureHandle& m, int budget, std::uint64_t seed) {
  ProbeState state;
  state.verdict.measure = m.name;
  state.verdict.axiom = Axiom::monotonicity;
  state.verdict.seed = seed;
  if (m.kind == MeasureKind::similarity_based) state.verdict.kernel = "cosine_circle";

  for (const auto& w : monotonicity_witnesses(m)) {
    if (state.probe(m, w.kind, w.a, w.b, w.note)) return state.verdict;
  }
  Rng rng(seed);
  while (state.verdict.probes < budget) {
    if (m.kind == MeasureKind::distance_based) {
      const DistanceMatrix b = random_distance_matrix(rng, sample_n(rng, m), 0.5);
      const PerturbationPlan plan = random_plan(rng, b);
      if (plan.deltas.empty()) continue;
      const Eigen::MatrixXd a = apply_plan(b, plan);
      if (state.probe(m, MeasureKind::distance_based, a, b.data(), "random valid upward perturbation")) {
        return state.verdict;
      }
    } else {
      const int n = sample_n(rng, m);
      const std::vector<double> angles = random_arc_angles(rng, n, 1.2, 0.4);
      const std::vector<double> moved = monotone_outward_move(rng, angles);
      if (state.probe(m, MeasureKind::similarity_based, cosine_matrix(moved).data(),
                      cosine_matrix(angles).data(), "outward move on the circle")) {
        return state.verdict;
      }
    }
  }
  return state.verdict;
}

// ─── Uniqueness ──────────────────────────────────────────────────────────────

AxiomVerdict check_uniqueness(const MeasureHandle& m, int budget, std::uint64_t seed) {
  ProbeState state;
  state.verdict.measure = m.name;
  state.verdict.axiom = Axiom::uniqueness;
  state.verdict.seed = seed;
  if (m.kind == MeasureKind::similarity_based) state.verdict.kernel = "cosine_circle";

  for (const auto& w : uniqueness_witnesses(m)) {
    if (state.probe(m, w.kind, w.a, w.b, w.note)) return state.verdict;
  }
  Rng rng(seed);
  while (state.verdict.probes < budget) {
    if (m.kind == MeasureKind::distance_based) {
      auto [a, b] = random_uniqueness_pair(rng, sample_n(rng, m));
      if (state.probe(m, MeasureKind::distance_based, a.data(), b.data(),
                      "duplicate replaced by a fresh element")) {
        return state.verdict;
      }
    } else {
      const int n = sample_n(rng, m);
      std::vector<double> shared = random_arc_angles(rng, n - 1, 1.4, 0.3);
      std::vector<double> b_angles = shared;
      b_angles.insert(b_angles.begin(), shared[0]);
      double fresh = 0.0;
      for (int tries = 0; tries < 64; ++tries) {
        fresh = rng.uniform(0.0, 1.5);
        bool distinct = true;
        for (double s : shared) distinct = distinct && circle_distance(fresh, s) > 1e-4;
        if (distinct) break;
      }
      std::vector<double> a_angles = shared;
      a_angles.insert(a_angles.begin(), fresh);
      if (state.probe(m, MeasureKind::similarity_based, cosine_matrix(a_angles).data(),
                      cosine_matrix(b_angles).data(), "duplicate replaced by a fresh angle")) {
        return state.verdict;
      }
    }
  }
  return state.verdict;
}

// ─── Continuity ──────────────────────────────────────────────────────────────

namespace {

struct GapAnalysis {
  bool violated = false;
  double gap = 0.0;
};

// v0 is the value at the witness, vals[k] the value at step 2^-k. A jump is a
// gap that stabilizes above 10*tol instead of shrinking; a -inf witness value
// is a jump only if the nearby values stabilize at a finite level.
GapAnalysis analyze_gaps(double v0, const std::vector<double>& vals, double tol) {
  GapAnalysis out;
  const double last = vals[kContinuitySteps];
  const double prev = vals[kContinuitySteps - 1];
  if (is_neg_infinity(v0)) {
    out.violated = std::isfinite(last) && std::isfinite(prev) && std::abs(last - prev) < tol;
    out.gap = std::isfinite(last) ? std::abs(last) : 0.0;
    return out;
  }
  const double g18 = std::abs(vals[kContinuitySteps - 2] - v0);
  const double g19 = std::abs(prev - v0);
  const double g20 = std::abs(last - v0);
  out.gap = g20;
  out.violated = g18 > 10.0 * tol && g19 > 10.0 * tol && g20 > 10.0 * tol &&
                 std::isfinite(g20) && std::isfinite(g19) && std::abs(g20 - g19) < tol;
  return out;
}

// Candidate directions for a distance witness: split a duplicate class first
// (where Unique-style jumps live), then bump pairs sitting exactly on a
// threshold parameter, then random valid plans.
std::vector<PerturbationPlan> continuity_directions(Rng& rng, const DistanceMatrix& d,
                                                    const MeasureHandle& m) {
  std::vector<PerturbationPlan> dirs;
  const auto classes = duplicate_classes(d);
  for (int c = 0; c < classes.count() && dirs.size() < 2; ++c) {
    if (classes.classes[c].size() >= 2) {
      dirs.push_back(split_plan(classes, classes.classes[c].front(), rng.uniform(0.2, 0.6)));
    }
  }
  if (auto it = m.params.find("t"); it != m.params.end()) {
    for (int i = 0; i < d.size(); ++i) {
      for (int j = i + 1; j < d.size(); ++j) {
        if (d(i, j) == it->second && classes.classes[classes.class_of[i]].size() == 1 &&
            classes.classes[classes.class_of[j]].size() == 1) {
          dirs.push_back(PerturbationPlan{{{i, j, rng.uniform(0.2, 0.6)}}});
        }
      }
    }
  }
  while (dirs.size() < 4) {
    PerturbationPlan plan = random_plan(rng, d);
    if (plan.deltas.empty()) break;
    dirs.push_back(std::move(plan));
  }
  return dirs;
}

AxiomVerdict continuity_over_distance_witnesses(const MeasureHandle& m,
                                                const std::vector<DistanceMatrix>& witnesses,
                                                std::uint64_t seed, double tol) {
  AxiomVerdict verdict;
  verdict.measure = m.name;
  verdict.axiom = Axiom::continuity;
  verdict.seed = seed;
  Rng rng(seed);
  for (const auto& d : witnesses) {
    const double v0 = m(d);
    for (const auto& plan : continuity_directions(rng, d, m)) {
      ++verdict.probes;
      std::vector<double> vals(kContinuitySteps + 1, 0.0);
      for (int k = 1; k <= kContinuitySteps; ++k) {
        vals[k] = eval_matrix(m, apply_plan(d, plan, std::pow(2.0, -k)));
      }
      const GapAnalysis gaps = analyze_gaps(v0, vals, tol);
      if (gaps.violated) {
        verdict.outcome = Verdict::violated;
        std::ostringstream note;
        note << "value gap stabilizes at " << gaps.gap << " as the step shrinks";
        verdict.witness = Witness{MeasureKind::distance_based,
                                  apply_plan(d, plan, std::pow(2.0, -kContinuitySteps)), d.data(),
                                  vals[kContinuitySteps], v0, note.str()};
        return verdict;
      }
    }
  }
  return verdict;
}

AxiomVerdict continuity_over_angle_witnesses(const MeasureHandle& m, std::uint64_t seed, double tol) {
  AxiomVerdict verdict;
  verdict.measure = m.name;
  verdict.axiom = Axiom::continuity;
  verdict.seed = seed;
  verdict.kernel = "cosine_circle";
  Rng rng(seed);
  for (int w = 0; w < 6; ++w) {
    const int n = sample_n(rng, m);
    std::vector<double> angles = random_arc_angles(rng, n, 1.4, w < 3 ? 1.0 : 0.0);
    const double v0 = m(cosine_matrix(angles));
    for (int dir = 0; dir < 2; ++dir) {
      ++verdict.probes;
      const int idx = rng.uniform_int(n);
      const double delta = rng.uniform(0.1, 0.4);
      std::vector<double> vals(kContinuitySteps + 1, 0.0);
      for (int k = 1; k <= kContinuitySteps; ++k) {
        std::vector<double> moved = angles;
        moved[idx] += delta * std::pow(2.0, -k);
        vals[k] = m(cosine_matrix(moved));
      }
      const GapAnalysis gaps = analyze_gaps(v0, vals, tol);
      if (gaps.violated) {
        std::vector<double> moved = angles;
        moved[idx] += delta * std::pow(2.0, -kContinuitySteps);
        verdict.outcome = Verdict::violated;
        verdict.witness = Witness{MeasureKind::similarity_based, cosine_matrix(moved).data(),
                                  cosine_matrix(angles).data(), vals[kContinuitySteps], v0,
                                  "kernel-path gap fails to vanish"};
        return verdict;
      }
    }
  }
  return verdict;
}

}  // namespace

AxiomVerdict check_continuity(const MeasureHandle& m, const std::vector<DistanceMatrix>& witnesses,
                              std::uint64_t seed, double tol) {
  if (m.kind != MeasureKind::distance_based) {
    throw Error(Errc::invalid_order,
                "distance-matrix continuity witnesses require a distance-based measure");
  }
  return continuity_over_distance_witnesses(m, witnesses, seed, tol);
}

AxiomVerdict check_continuity(const MeasureHandle& m, std::uint64_t seed, double tol) {
  if (m.kind == MeasureKind::similarity_based) {
    return continuity_over_angle_witnesses(m, seed, tol);
  }
  std::vector<DistanceMatrix> witnesses = continuity_witnesses(m);
  Rng rng(mix_seed(seed, 0x77));
  for (int i = 0; i < 3; ++i) {
    witnesses.push_back(random_distance_matrix(rng, sample_n(rng, m), 0.8));
  }
  for (int i = 0; i < 2; ++i) {
    witnesses.push_back(random_distance_matrix(rng, sample_n(rng, m), 0.0));
  }
  return continuity_over_distance_witnesses(m, witnesses, seed, tol);
}

// ─── Duplicate-placement invariance ──────────────────────────────────────────

namespace {

void compositions(int total, int parts, std::vector<int>& current,
                  std::vector<std::vector<int>>& out, int limit) {
  if (static_cast<int>(out.size()) >= limit) return;
  if (parts == 1) {
    if (total >= 1) {
      current.push_back(total);
      out.push_back(current);
      current.pop_back();
    }
    return;
  }
  for (int take = 1; take + (parts - 1) <= total; ++take) {
    current.push_back(take);
    compositions(total - take, parts - 1, current, out, limit);
    current.pop_back();
  }
}

}  // namespace

AxiomVerdict check_duplicate_placement_invariance(const MeasureHandle& m, int k, int n,
                                                  std::uint64_t seed, int budget) {
  if (k < 2 || k >= n) {
    throw Error(Errc::invalid_order, "duplicate placement check needs 2 <= k < n");
  }
  AxiomVerdict verdict;
  verdict.measure = m.name;
  verdict.axiom = Axiom::duplicate_placement;
  verdict.seed = seed;
  Rng rng(seed);

  // k pairwise-distinct base elements.
  Eigen::MatrixXd class_d;
  std::vector<double> base_angles;
  if (m.kind == MeasureKind::distance_based) {
    std::vector<std::array<double, 2>> pts;
    while (static_cast<int>(pts.size()) < k) {
      std::array<double, 2> p{rng.uniform(), rng.uniform()};
      bool ok = true;
      for (const auto& q : pts) ok = ok && std::hypot(p[0] - q[0], p[1] - q[1]) > 0.05;
      if (ok) pts.push_back(p);
    }
    class_d = Eigen::MatrixXd::Zero(k, k);
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) {
        class_d(a, b) = class_d(b, a) = std::hypot(pts[a][0] - pts[b][0], pts[a][1] - pts[b][1]);
      }
    }
  } else {
    verdict.kernel = "cosine_circle";
    while (static_cast<int>(base_angles.size()) < k) {
      double a = rng.uniform(0.0, 1.5);
      bool ok = true;
      for (double q : base_angles) ok = ok && circle_distance(a, q) > 0.01;
      if (ok) base_angles.push_back(a);
    }
  }

  std::vector<std::vector<int>> multiplicity_vectors;
  std::vector<int> scratch;
  compositions(n, k, scratch, multiplicity_vectors, budget);

  auto expand_value = [&](const std::vector<int>& mult, Eigen::MatrixXd* raw) {
    std::vector<int> cls;
    for (int c = 0; c < k; ++c) cls.insert(cls.end(), mult[c], c);
    if (m.kind == MeasureKind::distance_based) {
      Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) d(i, j) = class_d(cls[i], cls[j]);
      }
      *raw = d;
      return m(DistanceMatrix::validate(std::move(d)));
    }
    std::vector<double> angles;
    for (int i = 0; i < n; ++i) angles.push_back(base_angles[cls[i]]);
    const SimilarityMatrix s = cosine_matrix(angles);
    *raw = s.data();
    return m(s);
  };

  Eigen::MatrixXd first_raw;
  const double first = expand_value(multiplicity_vectors.front(), &first_raw);
  verdict.probes = 1;
  for (size_t i = 1; i < multiplicity_vectors.size(); ++i) {
    Eigen::MatrixXd raw;
    const double value = expand_value(multiplicity_vectors[i], &raw);
    ++verdict.probes;
    const bool equal = (is_neg_infinity(first) && is_neg_infinity(value)) ||
                       std::abs(value - first) <= 1e-9 * std::max(1.0, std::abs(first));
    if (!equal) {
      verdict.outcome = Verdict::violated;
      verdict.witness =
          Witness{m.kind, raw, first_raw, value, first, "duplicate placement changes the value"};
      return verdict;
    }
  }
  return verdict;
}

// ─── Property matrix ─────────────────────────────────────────────────────────

PropertyMatrixReport property_matrix(const std::vector<MeasureHandle>& measures, int budget,
                                     std::uint64_t seed) {
  PropertyMatrixReport report;
  report.budget = budget;
  report.seed = seed;
  for (size_t i = 0; i < measures.size(); ++i) {
    PropertyRow row{measures[i], {}, {}, {}};
    row.monotonicity = check_monotonicity(measures[i], budget, mix_seed(seed, 3 * i));
    row.uniqueness = check_uniqueness(measures[i], budget, mix_seed(seed, 3 * i + 1));
    row.continuity = check_continuity(measures[i], mix_seed(seed, 3 * i + 2));
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string format_property_table(const PropertyMatrixReport& report) {
  std::ostringstream os;
  size_t width = 18;
  for (const auto& row : report.rows) width = std::max(width, row.measure.display.size() + 2);
  os << std::string(width, ' ') << "monotonicity  uniqueness  continuity\n";
  for (const auto& row : report.rows) {
    std::string name = row.measure.display;
    name.resize(width, ' ');
    os << name;
    os << (row.monotonicity.violated() ? "✗" : "✓") << std::string(13, ' ');
    os << (row.uniqueness.violated() ? "✗" : "✓") << std::string(11, ' ');
    os << (row.continuity.violated() ? "✗" : "✓") << "\n";
  }
  return os.str();
}

nlohmann::json property_matrix_json(const PropertyMatrixReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    nlohmann::json r;
    r["measure"] = row.measure.name;
    r["display"] = row.measure.display;
    r["params"] = row.measure.params;
    r["monotonicity"] = verdict_to_json(row.monotonicity);
    r["uniqueness"] = verdict_to_json(row.uniqueness);
    r["continuity"] = verdict_to_json(row.continuity);
    rows.push_back(std::move(r));
  }
  nlohmann::json j;
  j["budget"] = report.budget;
  j["seed"] = report.seed;
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace divlab
