#ifndef PLAB_BINARY_EXPERIMENT_HPP
#define PLAB_BINARY_EXPERIMENT_HPP

#include <cstdint>
#include <vector>

#include "plab/errors.hpp"

namespace plab {

// Exact desk-scale experiments on the binary perceptron: sample Gaussian
// disorder, enumerate all 2^N sign vectors, and count the solutions of
// A sigma > 0 for every constraint prefix.

// Hard cap for exhaustive enumeration (2^30 sign vectors).
inline constexpr int kMaxEnumDim = 30;

struct PerceptronInstance {
    int n_dim = 0;          // N
    int n_constraints = 0;  // M
    std::uint64_t seed = 0;
    std::vector<double> matrix;  // row-major M x N, iid standard Gaussian

    double at(int row, int col) const { return matrix[row * n_dim + col]; }
    const double* row(int r) const { return matrix.data() + r * n_dim; }
};

// M = ceil(alpha * N), robust to alpha*N landing an ulp above an integer.
int constraint_count(double alpha, int n_dim);

// Deterministic disorder: entry (i, j) is draw i*N + j of a GaussianStream
// keyed by seed (inverse-CDF sampling, one counter per entry). Instances
// with the same seed share their leading rows, so appending constraints is
// a monotone coupling. Throws DimensionError for n_dim outside [1, 30].
PerceptronInstance sample_instance(int n_dim, int n_constraints,
                                   std::uint64_t seed);

struct BinaryCountReport {
    // counts[t] = |Z_t| = #{sigma : A_i sigma > 0 for all i <= t}, t = 0..M.
    std::vector<std::uint64_t> counts;
    int empirical_capacity_steps = 0;  // max t with counts[t] > 0
    std::uint64_t seed = 0;
};

// Exact counts for every prefix. Enumerates sign vectors in Gray-code order,
// maintaining A sigma incrementally (one column update of +-2 A_j per step);
// a zero dot product counts as a violation (ties are a null event under
// Gaussian disorder, and no tolerance is introduced).
BinaryCountReport count_solutions(const PerceptronInstance& instance);

// empirical_capacity_steps / n_dim for one instance.
double empirical_capacity(const PerceptronInstance& instance);

}  // namespace plab

#endif  // PLAB_BINARY_EXPERIMENT_HPP
