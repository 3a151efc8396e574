#ifndef PLAB_MOMENT_BOUNDS_HPP
#define PLAB_MOMENT_BOUNDS_HPP

#include "plab/gardner_derrida.hpp"

namespace plab {

// First-moment bound chains for the binary perceptron, expressed as
// exponential growth rates (nats per dimension) of the Markov bound on
// P(|Z_{alpha N}| >= 1).

enum class BoundMethod { annealed, conditional_spherical };
enum class BoundConclusion { bound_holds, inconclusive };

struct BoundCertificate {
    double alpha = 0.0;
    BoundMethod method = BoundMethod::annealed;
    double rate = 0.0;           // nats per dimension; bound_holds iff < 0
    double slack_epsilon = 0.0;  // concentration-event tolerance
    BoundConclusion conclusion = BoundConclusion::inconclusive;
    // Rate decomposition for the conditional method: rate = ln2 + gd + slack.
    double gd_value = 0.0;
    double q_star = 0.0;
};

// Growth rate of E|Z_{alpha N}|: (1 - alpha) ln 2. Negative iff alpha > 1.
double annealed_rate(double alpha);

BoundCertificate annealed_certificate(double alpha);

// Conditional chain: on the concentration event the per-vector solution
// probability is at most e^{N (GD(alpha) + eps)}, so summing over the 2^N
// sign vectors bounds the first moment at rate ln 2 + GD(alpha) + eps.
BoundCertificate conditional_rate(double alpha, double slack_epsilon,
                                  const QuadratureSpec& spec);

// Smallest alpha (to root_tol) whose conditional rate is negative; equals
// critical_alpha at slack 0 and grows with slack.
double capacity_upper_bound(double slack_epsilon, const QuadratureSpec& spec,
                            double root_tol);

inline constexpr double kDefaultSlackEpsilon = 1e-4;

}  // namespace plab

#endif  // PLAB_MOMENT_BOUNDS_HPP
