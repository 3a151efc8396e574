#ifndef PLAB_ERRORS_HPP
#define PLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace plab {

// Argument outside an operation's stated domain.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Enumeration dimension guard (n_dim must stay within the exact-count range).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Invalid Monte Carlo sample budget.
struct SampleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Root bracketing failed: endpoint signs do not straddle the root.
struct BracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A quadrature rule could not reach the requested tolerance within its
// node budget. Carries the best value reached and the achieved estimate.
struct NonConvergenceError : std::runtime_error {
    NonConvergenceError(const std::string& what, double best, double achieved,
                        long nodes)
        : std::runtime_error(what),
          best_value(best),
          error_estimate(achieved),
          nodes_used(nodes) {}

    double best_value;
    double error_estimate;
    long nodes_used;
};

}  // namespace plab

#endif  // PLAB_ERRORS_HPP
