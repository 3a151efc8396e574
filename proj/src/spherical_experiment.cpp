#include "plab/spherical_experiment.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "plab/gardner_derrida.hpp"
#include "plab/parallel.hpp"
#include "plab/rng.hpp"

namespace plab {

namespace {

// Hit-and-run tuning, calibrated so the M = 1 telescoping test passes.
constexpr int kBurnInSteps = 50;
constexpr int kThinning = 5;
constexpr int kRetryBudget = 3;

bool satisfies_all(const PerceptronInstance& inst, int rows,
                   const std::vector<double>& x) {
    for (int i = 0; i < rows; ++i) {
        double dot = 0.0;
        const double* a = inst.row(i);
        for (int j = 0; j < inst.n_dim; ++j) dot += a[j] * x[j];
        if (!(dot > 0.0)) return false;
    }
    return true;
}

double norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

void normalize(std::vector<double>& v) {
    const double n = norm(v);
    if (n > 0.0) {
        for (double& x : v) x /= n;
    }
}

void gaussian_vector(GaussianStream& stream, std::vector<double>& out) {
    for (double& x : out) x = stream.next();
}

// One hit-and-run move within the cone of the first `rows` constraints:
// pick a random great circle through x, intersect it with the feasible
// arcs (each half-space cuts the circle to an open half-circle), and jump
// to a uniform point of the intersection. x must be feasible on entry and
// stays feasible (moves that would leave the cone by roundoff are skipped).
void hit_and_run_move(const PerceptronInstance& inst, int rows,
                      std::vector<double>& x, std::vector<double>& dir,
                      GaussianStream& stream) {
    const int n = inst.n_dim;
    gaussian_vector(stream, dir);
    double proj = 0.0;
    for (int j = 0; j < n; ++j) proj += dir[j] * x[j];
    for (int j = 0; j < n; ++j) dir[j] -= proj * x[j];
    const double nd = norm(dir);
    if (nd < 1e-12) return;
    for (double& d : dir) d /= nd;

    // Feasible arc of c(theta) = x cos(theta) + d sin(theta) around theta=0.
    double lo = -std::numbers::pi;
    double hi = std::numbers::pi;
    for (int i = 0; i < rows; ++i) {
        const double* a = inst.row(i);
        double along_x = 0.0;
        double along_d = 0.0;
        for (int j = 0; j < n; ++j) {
            along_x += a[j] * x[j];
            along_d += a[j] * dir[j];
        }
        // a . c(theta) = R cos(theta - psi) > 0 <=> |theta - psi| < pi/2;
        // along_x > 0 guarantees psi in (-pi/2, pi/2), so 0 stays inside.
        const double psi = std::atan2(along_d, along_x);
        lo = std::max(lo, psi - std::numbers::pi / 2);
        hi = std::min(hi, psi + std::numbers::pi / 2);
    }

    const double theta = lo + uniform_open(stream) * (hi - lo);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    std::vector<double> candidate(n);
    for (int j = 0; j < n; ++j) candidate[j] = c * x[j] + s * dir[j];
    normalize(candidate);
    if (rows == 0 || satisfies_all(inst, rows, candidate)) {
        x.swap(candidate);
    }
}

SphericalFreeEnergyEstimate truncated_estimate(const PerceptronInstance& inst,
                                               SphericalMethod method,
                                               long samples) {
    SphericalFreeEnergyEstimate est;
    est.method = method;
    est.samples = samples;
    est.truncated = true;
    est.f_hat = -static_cast<double>(inst.n_dim);  // (-N^2)/N floor
    est.std_error = 0.0;
    return est;
}

}  // namespace

SphericalFreeEnergyEstimate estimate_f_direct(const PerceptronInstance& inst,
                                              long samples,
                                              std::uint64_t seed) {
    if (samples <= 0) throw SampleError("samples must be positive");
    const int n = inst.n_dim;
    const int m = inst.n_constraints;
    GaussianStream stream(seed);
    std::vector<double> g(n);
    long hits = 0;
    for (long k = 0; k < samples; ++k) {
        gaussian_vector(stream, g);  // always n draws per sample
        bool ok = true;
        for (int i = 0; i < m; ++i) {
            double dot = 0.0;
            const double* a = inst.row(i);
            for (int j = 0; j < n; ++j) dot += a[j] * g[j];
            if (!(dot > 0.0)) {
                ok = false;
                break;
            }
        }
        if (ok) ++hits;
    }

    if (hits == 0) return truncated_estimate(inst, SphericalMethod::direct_gaussian, samples);

    SphericalFreeEnergyEstimate est;
    est.method = SphericalMethod::direct_gaussian;
    est.samples = samples;
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    est.f_hat = std::log(p) / n;
    // Delta method for ln(p_hat): Var ~ (1-p)/(samples * p).
    est.std_error =
        std::sqrt((1.0 - p) / (static_cast<double>(samples) * p)) / n;
    return est;
}

SphericalFreeEnergyEstimate estimate_f_sequential(
    const PerceptronInstance& inst, long samples_per_step,
    std::uint64_t seed) {
    if (samples_per_step < 100) {
        throw SampleError("samples_per_step must be >= 100");
    }
    const int n = inst.n_dim;
    const int m = inst.n_constraints;
    GaussianStream stream(seed);

    SphericalFreeEnergyEstimate est;
    est.method = SphericalMethod::sequential_conditioning;
    est.samples = 0;
    if (m == 0) return est;  // whole sphere: F = 0 exactly

    std::vector<double> x(n);
    gaussian_vector(stream, x);
    normalize(x);
    std::vector<double> dir(n);
    std::vector<double> next_start;

    double sum_log = 0.0;
    double var_sum = 0.0;
    for (int step = 0; step < m; ++step) {
        // Chain samples the cone of rows [0, step); constraint `step` is the
        // event whose conditional probability is being estimated.
        long hits = 0;
        const double* a = inst.row(step);
        for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
            hits = 0;
            next_start.clear();
            for (int b = 0; b < kBurnInSteps; ++b) {
                hit_and_run_move(inst, step, x, dir, stream);
            }
            for (long k = 0; k < samples_per_step; ++k) {
                for (int t = 0; t < kThinning; ++t) {
                    hit_and_run_move(inst, step, x, dir, stream);
                }
                double dot = 0.0;
                for (int j = 0; j < n; ++j) dot += a[j] * x[j];
                if (dot > 0.0) {
                    ++hits;
                    next_start = x;
                }
            }
            if (hits > 0) break;
        }
        if (hits == 0) {
            // No feasible starting direction for the next cone.
            return truncated_estimate(inst,
                                      SphericalMethod::sequential_conditioning,
                                      est.samples);
        }
        est.samples += samples_per_step;
        const double p = static_cast<double>(hits) /
                         static_cast<double>(samples_per_step);
        sum_log += std::log(p);
        if (p < 1.0) {
            var_sum += (1.0 - p) / (static_cast<double>(samples_per_step) * p);
        }
        x = next_start;
    }

    est.f_hat = sum_log / n;
    est.std_error = std::sqrt(var_sum) / n;
    return est;
}

FeasibilityResult spherical_feasibility(const PerceptronInstance& inst,
                                        long max_iters) {
    if (max_iters < 1) throw DomainError("max_iters must be >= 1");
    const int n = inst.n_dim;
    const int m = inst.n_constraints;
    FeasibilityResult res;
    if (m == 0) {
        res.found = true;
        res.witness.assign(n, 0.0);
        res.witness[0] = 1.0;
        res.min_margin = std::numeric_limits<double>::infinity();
        return res;
    }

    std::vector<double> row_norm(m);
    for (int i = 0; i < m; ++i) {
        double s = 0.0;
        const double* a = inst.row(i);
        for (int j = 0; j < n; ++j) s += a[j] * a[j];
        row_norm[i] = std::sqrt(s);
        if (row_norm[i] == 0.0) return res;  // degenerate row, give up
    }

    // Gram matrix for O(M) margin updates per perceptron step.
    std::vector<double> gram(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i) {
        for (int k = i; k < m; ++k) {
            double s = 0.0;
            const double* ai = inst.row(i);
            const double* ak = inst.row(k);
            for (int j = 0; j < n; ++j) s += ai[j] * ak[j];
            gram[static_cast<std::size_t>(i) * m + k] = s;
            gram[static_cast<std::size_t>(k) * m + i] = s;
        }
    }

    std::vector<double> y(n);
    for (int j = 0; j < n; ++j) y[j] = inst.at(0, j) / row_norm[0];
    std::vector<double> v(m);  // A y, updated incrementally
    for (int i = 0; i < m; ++i) {
        v[i] = gram[static_cast<std::size_t>(i) * m] / row_norm[0];
    }

    const auto verify = [&](FeasibilityResult& out) {
        out.witness = y;
        normalize(out.witness);
        double mn = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) {
            double dot = 0.0;
            const double* a = inst.row(i);
            for (int j = 0; j < n; ++j) dot += a[j] * out.witness[j];
            mn = std::min(mn, dot);
        }
        out.min_margin = mn;
        return mn > 0.0;
    };

    for (long iter = 0; iter < max_iters; ++iter) {
        res.iterations = iter;
        int worst = 0;
        double worst_margin = v[0] / row_norm[0];
        for (int i = 1; i < m; ++i) {
            const double margin = v[i] / row_norm[i];
            if (margin < worst_margin) {
                worst_margin = margin;
                worst = i;
            }
        }
        if (worst_margin > 0.0) {
            if (verify(res)) {
                res.found = true;
                return res;
            }
            // Incremental margins drifted; refresh and keep going.
            for (int i = 0; i < m; ++i) {
                double dot = 0.0;
                const double* a = inst.row(i);
                for (int j = 0; j < n; ++j) dot += a[j] * y[j];
                v[i] = dot;
            }
            continue;
        }
        const double inv = 1.0 / row_norm[worst];
        const double* aw = inst.row(worst);
        for (int j = 0; j < n; ++j) y[j] += aw[j] * inv;
        const double* gcol = &gram[static_cast<std::size_t>(worst) * m];
        for (int i = 0; i < m; ++i) v[i] += gcol[i] * inv;
    }
    res.iterations = max_iters;
    verify(res);  // report the best margin reached
    res.found = res.min_margin > 0.0;
    return res;
}

VarianceProbeSummary variance_probe(double alpha, int n_dim, int trials,
                                    long samples, std::uint64_t seed,
                                    const QuadratureSpec& spec) {
    if (trials < 1) throw DomainError("trials must be >= 1");
    if (samples <= 0) throw SampleError("samples must be positive");

    VarianceProbeSummary sum;
    sum.alpha = alpha;
    sum.trials = trials;
    sum.n_dim_small = n_dim;
    sum.n_dim_large = 2 * n_dim;
    sum.gd_reference = gd_min(alpha, spec).value;

    for (int which = 0; which < 2; ++which) {
        const int n = which == 0 ? sum.n_dim_small : sum.n_dim_large;
        const int m = constraint_count(alpha, n);
        std::vector<double> f(trials);
        std::vector<int> trunc(trials, 0);
        parallel_for(trials, [&](long t) {
            const auto inst = sample_instance(
                n, m, derive_seed(seed, 2 * which, static_cast<std::uint64_t>(t)));
            const auto est = estimate_f_direct(
                inst, samples,
                derive_seed(seed, 2 * which + 1, static_cast<std::uint64_t>(t)));
            f[t] = est.f_hat;
            trunc[t] = est.truncated ? 1 : 0;
        });
        double mean = 0.0;
        for (double v : f) mean += v;
        mean /= trials;
        double var = 0.0;
        if (trials > 1) {
            for (double v : f) var += (v - mean) * (v - mean);
            var /= (trials - 1);
        }
        int truncated = 0;
        for (int t : trunc) truncated += t;
        if (which == 0) {
            sum.mean_small = mean;
            sum.variance_small = var;
            sum.truncated_small = truncated;
        } else {
            sum.mean_large = mean;
            sum.variance_large = var;
            sum.truncated_large = truncated;
        }
    }
    sum.variance_applicable = trials >= 2;
    if (sum.variance_applicable && sum.variance_large > 0.0) {
        sum.variance_ratio = sum.variance_small / sum.variance_large;
    }
    return sum;
}

}  // namespace plab
