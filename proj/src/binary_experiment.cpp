#include "plab/binary_experiment.hpp"

#include <bit>
#include <cmath>

#include "plab/rng.hpp"

namespace plab {

int constraint_count(double alpha, int n_dim) {
    return static_cast<int>(std::ceil(alpha * n_dim - 1e-9));
}

PerceptronInstance sample_instance(int n_dim, int n_constraints,
                                   std::uint64_t seed) {
    if (n_dim < 1 || n_dim > kMaxEnumDim) {
        throw DimensionError("n_dim must be in [1, 30]");
    }
    if (n_constraints < 0) {
        throw DimensionError("n_constraints must be >= 0");
    }
    PerceptronInstance inst;
    inst.n_dim = n_dim;
    inst.n_constraints = n_constraints;
    inst.seed = seed;
    inst.matrix.resize(static_cast<std::size_t>(n_dim) * n_constraints);
    GaussianStream stream(seed);
    for (double& a : inst.matrix) a = stream.next();
    return inst;
}

BinaryCountReport count_solutions(const PerceptronInstance& instance) {
    const int n = instance.n_dim;
    const int m = instance.n_constraints;
    if (n < 1 || n > kMaxEnumDim) {
        throw DimensionError("n_dim must be in [1, 30]");
    }

    // 2*A columns, column-major, for the Gray-code updates.
    std::vector<double> twice_col(static_cast<std::size_t>(n) * m);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < m; ++i) {
            twice_col[static_cast<std::size_t>(j) * m + i] =
                2.0 * instance.at(i, j);
        }
    }

    // s = A sigma for sigma = all +1.
    std::vector<double> s(m, 0.0);
    for (int i = 0; i < m; ++i) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j) acc += instance.at(i, j);
        s[i] = acc;
    }

    // hist[v] = #sigma whose first violated constraint has index v (0-based);
    // v = m means all constraints satisfied.
    std::vector<std::uint64_t> hist(m + 1, 0);
    const auto first_violation = [&]() {
        int v = 0;
        while (v < m && s[v] > 0.0) ++v;
        return v;
    };

    ++hist[first_violation()];
    const std::uint64_t total = std::uint64_t{1} << n;
    std::uint64_t mask = 0;  // bit j set <=> sigma_j = -1
    for (std::uint64_t k = 1; k < total; ++k) {
        const int j = std::countr_zero(k);
        mask ^= std::uint64_t{1} << j;
        const double* col = &twice_col[static_cast<std::size_t>(j) * m];
        if (mask >> j & 1) {
            for (int i = 0; i < m; ++i) s[i] -= col[i];
        } else {
            for (int i = 0; i < m; ++i) s[i] += col[i];
        }
        ++hist[first_violation()];
    }

    BinaryCountReport rep;
    rep.seed = instance.seed;
    rep.counts.assign(m + 1, 0);
    std::uint64_t acc = 0;
    for (int t = m; t >= 0; --t) {
        acc += hist[t];
        rep.counts[t] = acc;
    }
    rep.empirical_capacity_steps = 0;
    for (int t = m; t >= 0; --t) {
        if (rep.counts[t] > 0) {
            rep.empirical_capacity_steps = t;
            break;
        }
    }
    return rep;
}

double empirical_capacity(const PerceptronInstance& instance) {
    const BinaryCountReport rep = count_solutions(instance);
    return static_cast<double>(rep.empirical_capacity_steps) / instance.n_dim;
}

}  // namespace plab
