#include "divlab/measures_poly.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>

namespace divlab {

namespace {

constexpr double kEigClamp = 1e-12;

void require_n(const DistanceMatrix& d, int min_n) {
  if (d.size() < min_n) {
    Error e(Errc::n_too_small,
            "NTooSmall: n=" + std::to_string(d.size()) + ", need n>=" + std::to_string(min_n));
    e.i = d.size();
    throw e;
  }
}

double upper_triangle_sum(const DistanceMatrix& d) {
  double s = 0.0;
  for (int i = 0; i < d.size(); ++i) {
    for (int j = i + 1; j < d.size(); ++j) s += d(i, j);
  }
  return s;
}

}  // namespace

EnergyExponent::EnergyExponent(double g) : gamma(g) {
  if (!(g > 0.0)) {
    throw Error(Errc::invalid_order, "energy exponent gamma must be positive");
  }
}

SpeciesOrder::SpeciesOrder(double q_) : q(q_) {
  if (!(q_ >= 0.0) || q_ == 1.0) {
    throw Error(Errc::invalid_order, "InvalidOrder: species q must satisfy q >= 0, q != 1");
  }
}

MeasureValue average(const DistanceMatrix& d) {
  require_n(d, 2);
  const double n = d.size();
  return 2.0 * upper_triangle_sum(d) / (n * (n - 1.0));
}

MeasureValue sum_average(const DistanceMatrix& d) {
  require_n(d, 2);
  return upper_triangle_sum(d) / d.size();
}

MeasureValue diameter(const DistanceMatrix& d) {
  require_n(d, 2);
  double best = 0.0;
  for (int i = 0; i < d.size(); ++i) {
    for (int j = i + 1; j < d.size(); ++j) best = std::max(best, d(i, j));
  }
  return best;
}

MeasureValue sum_diameter(const DistanceMatrix& d) {
  require_n(d, 2);
  double total = 0.0;
  for (int i = 0; i < d.size(); ++i) {
    double row = 0.0;
    for (int j = 0; j < d.size(); ++j) {
      if (j != i) row = std::max(row, d(i, j));
    }
    total += row;
  }
  return total;
}

MeasureValue bottleneck(const DistanceMatrix& d) {
  require_n(d, 2);
  double best = d(0, 1);
  for (int i = 0; i < d.size(); ++i) {
    for (int j = i + 1; j < d.size(); ++j) best = std::min(best, d(i, j));
  }
  return best;
}

MeasureValue sum_bottleneck(const DistanceMatrix& d) {
  require_n(d, 2);
  double total = 0.0;
  for (int i = 0; i < d.size(); ++i) {
    double row = std::numeric_limits<double>::infinity();
    for (int j = 0; j < d.size(); ++j) {
      if (j != i) row = std::min(row, d(i, j));
    }
    total += row;
  }
  return total;
}

MeasureValue energy(const DistanceMatrix& d, EnergyExponent g) {
  require_n(d, 2);
  const double n = d.size();
  double s = 0.0;
  for (int i = 0; i < d.size(); ++i) {
    for (int j = i + 1; j < d.size(); ++j) {
      if (d(i, j) == 0.0) return neg_infinity();
      s += 1.0 / std::pow(d(i, j), g.gamma);
    }
  }
  return -2.0 * s / (n * (n - 1.0));
}

MeasureValue unique_fraction(const DistanceMatrix& d) {
  return static_cast<double>(duplicate_classes(d).count()) / d.size();
}

MeasureValue unique_plus_bounded(const DistanceMatrix& d) {
  require_n(d, 2);
  return unique_fraction(d) + 1.0 - std::exp(-average(d));
}

Spectrum sym_spectrum(const SimilarityMatrix& s) {
  const int n = s.size();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s.data() / double(n),
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(Errc::no_convergence, "NoConvergence in spectrum computation");
  }
  Eigen::VectorXd lambda = solver.eigenvalues();
  for (int i = 0; i < n; ++i) lambda(i) = std::max(lambda(i), 0.0);
  std::sort(lambda.data(), lambda.data() + n, std::greater<double>());
  return Spectrum{std::move(lambda)};
}

MeasureValue vendi_score(const SimilarityMatrix& s) {
  const Spectrum spec = sym_spectrum(s);
  double entropy = 0.0;
  for (int i = 0; i < spec.eigenvalues.size(); ++i) {
    const double lambda = spec.eigenvalues(i);
    if (lambda > kEigClamp) entropy -= lambda * std::log(lambda);
  }
  return std::exp(entropy);
}

MeasureValue dpp_det(const SimilarityMatrix& s) {
  const double det = s.data().partialPivLu().determinant();
  if (det < 0.0 && det > -kEigClamp) return 0.0;
  return det;
}

MeasureValue rke(const SimilarityMatrix& s) {
  const double n = s.size();
  return -std::log(s.data().array().square().sum() / (n * n));
}

MeasureValue species(const SimilarityMatrix& s, SpeciesOrder order) {
  const double q = order.q;
  double outer = 0.0;
  for (int i = 0; i < s.size(); ++i) {
    double row = 0.0;
    for (int j = 0; j < s.size(); ++j) row += s(i, j);
    outer += std::pow(row, q - 1.0);
  }
  return std::pow(outer, 1.0 / (1.0 - q));
}

MeasureValue species_log(const SimilarityMatrix& s, SpeciesOrder order) {
  const double q = order.q;
  std::vector<double> terms(s.size());
  for (int i = 0; i < s.size(); ++i) {
    double row = 0.0;
    for (int j = 0; j < s.size(); ++j) row += s(i, j);
    if (!(row > 0.0)) {
      throw Error(Errc::invalid_order, "species_log requires positive row sums");
    }
    terms[i] = (q - 1.0) * std::log(row);
  }
  const double peak = *std::max_element(terms.begin(), terms.end());
  double acc = 0.0;
  for (double t : terms) acc += std::exp(t - peak);
  return (peak + std::log(acc)) / (1.0 - q);
}

}  // namespace divlab
