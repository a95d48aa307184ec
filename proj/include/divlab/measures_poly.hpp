#pragma once

#include "divlab/core.hpp"

namespace divlab {

// Parameter of Energy(gamma); gamma > 0.
struct EnergyExponent {
  double gamma;
  explicit EnergyExponent(double g);
};

// Parameter of Species(q); q >= 0, q != 1.
struct SpeciesOrder {
  double q;
  explicit SpeciesOrder(double q_);
};

// Eigenvalues of S/n, clamped at 0 and sorted descending. Since s_ii = 1 the
// spectrum sums to 1 (up to numerics); it is shared by Vendi.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  double sum() const { return eigenvalues.sum(); }
};

// ─── Distance-based measures ─────────────────────────────────────────────────

MeasureValue average(const DistanceMatrix& d);         // 2/(n(n-1)) * sum_{i<j} d_ij
MeasureValue sum_average(const DistanceMatrix& d);     // 1/n * sum_{i<j} d_ij
MeasureValue diameter(const DistanceMatrix& d);        // max_{i<j} d_ij
MeasureValue sum_diameter(const DistanceMatrix& d);    // sum_i max_{j!=i} d_ij
MeasureValue bottleneck(const DistanceMatrix& d);      // min_{i<j} d_ij
MeasureValue sum_bottleneck(const DistanceMatrix& d);  // sum_i min_{j!=i} d_ij

// -2/(n(n-1)) * sum_{i<j} 1/d_ij^gamma; -inf when any pair coincides.
MeasureValue energy(const DistanceMatrix& d, EnergyExponent g);

// Fraction of pairwise-distinct elements: (#duplicate classes)/n.
MeasureValue unique_fraction(const DistanceMatrix& d);

// Unique(X) + 1 - exp(-Average(X)): monotone and unique but discontinuous,
// jumping by 1/n whenever a duplicate pair splits.
MeasureValue unique_plus_bounded(const DistanceMatrix& d);

// ─── Similarity-based measures ───────────────────────────────────────────────

Spectrum sym_spectrum(const SimilarityMatrix& s);

// exp(-sum_i lambda_i log lambda_i) over the spectrum of S/n, natural log,
// 0 log 0 = 0.
MeasureValue vendi_score(const SimilarityMatrix& s);

// det(S); tiny negative results from factorization noise are clamped to 0.
MeasureValue dpp_det(const SimilarityMatrix& s);

// -log(1/n^2 * sum_{i,j} s_ij^2), all ordered pairs including the diagonal.
MeasureValue rke(const SimilarityMatrix& s);

// (sum_i (sum_j s_ij)^(q-1))^(1/(1-q)), inner sum including j = i.
MeasureValue species(const SimilarityMatrix& s, SpeciesOrder order);

// log of species(s, q), evaluated stably via log-sum-exp over the row sums.
// The plain expression leaves the double range near q = 1; the log form
// keeps orderings comparable there. Requires positive row sums.
MeasureValue species_log(const SimilarityMatrix& s, SpeciesOrder order);

}  // namespace divlab
