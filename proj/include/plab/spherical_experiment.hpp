#ifndef PLAB_SPHERICAL_EXPERIMENT_HPP
#define PLAB_SPHERICAL_EXPERIMENT_HPP

#include <cstdint>
#include <vector>

#include "plab/binary_experiment.hpp"
#include "plab/quadrature.hpp"

namespace plab {

// Monte Carlo estimation of the spherical free energy
//   F(A) = (1/N) max{ ln( vol fraction of the ball with A sigma > 0 ), -N^2 }
// and empirical probes of its concentration and capacity.
//
// Central geometric fact used by both estimators: {sigma : A sigma > 0} is a
// cone with apex at the origin, so its ball-volume fraction equals the
// probability that a uniform direction lands in it (slice the ball into
// spheres r S^{N-1}; the cone meets every sphere in the same angular set).
// Uniform directions are realized as normalized standard Gaussian vectors,
// and since hit/miss is scale-invariant the normalization can be skipped.

enum class SphericalMethod { direct_gaussian, sequential_conditioning };

struct SphericalFreeEnergyEstimate {
    double f_hat = 0.0;     // estimate of F(A), nats per dimension; <= 0
    double std_error = 0.0; // delta-method standard error of f_hat
    SphericalMethod method = SphericalMethod::direct_gaussian;
    long samples = 0;
    // True when zero hits force the truncation floor f_hat = -N^2/N = -N.
    bool truncated = false;
};

// Direct estimator: f_hat = ln(hit fraction)/N over iid Gaussian directions.
// Standard error by the binomial delta method. Throws SampleError if
// samples <= 0.
SphericalFreeEnergyEstimate estimate_f_direct(const PerceptronInstance& instance,
                                              long samples,
                                              std::uint64_t seed);

// Sequential (chain-rule) estimator:
//   F_hat = (1/N) sum_i ln p_hat_i,
//   p_i = P(A_i sigma > 0 | A_j sigma > 0 for j < i),
// with each conditional probability estimated by hit-and-run on the sphere
// restricted to the cone of the first i-1 constraints (uniform point on the
// feasible arc of a random great circle through the current point). Reaches
// probabilities far below the direct estimator's floor. Standard error
// propagates per-step binomial errors and ignores inter-step correlation
// (a bias caveat, not a guarantee). If a step records no hits and the retry
// budget is exhausted, the cone cannot be seeded and the estimate falls back
// to the truncation floor. Throws SampleError if samples_per_step < 100.
SphericalFreeEnergyEstimate estimate_f_sequential(
    const PerceptronInstance& instance, long samples_per_step,
    std::uint64_t seed);

struct FeasibilityResult {
    bool found = false;
    std::vector<double> witness;  // unit vector with A w > 0 when found
    double min_margin = 0.0;      // min_i A_i w (verified by direct product)
    long iterations = 0;
};

// Classical perceptron iteration: add the most-violated (normalized) row,
// renormalize, repeat. A returned witness is always re-verified against the
// matrix; not_found after max_iters is inconclusive (one-sided certificate).
FeasibilityResult spherical_feasibility(const PerceptronInstance& instance,
                                        long max_iters);

struct VarianceProbeSummary {
    double alpha = 0.0;
    int trials = 0;
    int n_dim_small = 0;
    int n_dim_large = 0;  // = 2 * n_dim_small
    double mean_small = 0.0;
    double variance_small = 0.0;
    double mean_large = 0.0;
    double variance_large = 0.0;
    bool variance_applicable = false;  // false when trials < 2
    double variance_ratio = 0.0;       // variance_small / variance_large
    double gd_reference = 0.0;         // gd_min(alpha).value
    int truncated_small = 0;           // trials that hit the truncation floor
    int truncated_large = 0;
};

// Sample mean/variance of direct f_hat across instances at n_dim and
// 2*n_dim (trials instances each, parallelized with per-trial seeds).
VarianceProbeSummary variance_probe(double alpha, int n_dim, int trials,
                                    long samples, std::uint64_t seed,
                                    const QuadratureSpec& spec);

}  // namespace plab

#endif  // PLAB_SPHERICAL_EXPERIMENT_HPP
