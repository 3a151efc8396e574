#ifndef PLAB_QUADRATURE_HPP
#define PLAB_QUADRATURE_HPP

#include <functional>

#include "plab/errors.hpp"

namespace plab {

// Configuration of the Gaussian-expectation engine E[f(U)], U ~ N(0,1).
struct QuadratureSpec {
    enum class Rule { gauss_hermite, adaptive_interval };

    Rule rule = Rule::adaptive_interval;
    int node_count = 400;               // gauss_hermite only, >= 16
    double interval_half_width = 12.0;  // adaptive_interval only, >= 8
    double abs_tol = 1e-8;
    long max_nodes = 2000000;           // adaptive node budget

    static QuadratureSpec gauss_hermite(int nodes = 400, double tol = 1e-10);
    static QuadratureSpec adaptive(double half_width = 12.0, double tol = 1e-8);

    void validate() const;  // throws DomainError
};

struct ExpectationResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long nodes_used = 0;
};

// E[f(U)] for U standard normal, with |error_estimate| <= spec.abs_tol on
// success. Gauss-Hermite estimates its error by comparing against the
// half-order rule; the adaptive rule subdivides [-w, w] (Simpson with
// Richardson acceptance) and folds the truncated Gaussian tail mass into the
// estimate. Throws NonConvergenceError (carrying the best value and achieved
// estimate) when the tolerance is out of reach. Deterministic for fixed spec.
ExpectationResult gaussian_expectation(const std::function<double(double)>& f,
                                       const QuadratureSpec& spec);

// E[ln H(U sqrt(q/(1-q)))], evaluated through log_gauss_tail. q in [0, 1).
//
// For q > 1 - 1e-6 the quadrature is replaced by the asymptotic form
//   E[ln H(sU)] = -s^2/4 - ln(s)/2 + C0 + C1/s + O(1/s^2),  s^2 = q/(1-q),
// whose constants are documented at the definition site; its error floor
// (~1/s^2, reported in error_estimate) may exceed abs_tol near q = 1, which
// is the one documented exception to the error_estimate <= abs_tol contract.
ExpectationResult expected_log_tail(double q, const QuadratureSpec& spec);

}  // namespace plab

#endif  // PLAB_QUADRATURE_HPP
