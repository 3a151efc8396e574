#include "plab/moment_bounds.hpp"

#include <cmath>
#include <numbers>

namespace plab {

namespace {
constexpr double kLn2 = std::numbers::ln2;
}

double annealed_rate(double alpha) {
    if (!(alpha > 0.0)) throw DomainError("annealed_rate requires alpha > 0");
    return (1.0 - alpha) * kLn2;
}

BoundCertificate annealed_certificate(double alpha) {
    BoundCertificate cert;
    cert.alpha = alpha;
    cert.method = BoundMethod::annealed;
    cert.rate = annealed_rate(alpha);
    cert.slack_epsilon = 0.0;
    cert.conclusion = cert.rate < 0.0 ? BoundConclusion::bound_holds
                                      : BoundConclusion::inconclusive;
    return cert;
}

BoundCertificate conditional_rate(double alpha, double slack_epsilon,
                                  const QuadratureSpec& spec) {
    if (!(slack_epsilon >= 0.0)) {
        throw DomainError("slack_epsilon must be >= 0");
    }
    const GdEvaluation gd = gd_min(alpha, spec);
    BoundCertificate cert;
    cert.alpha = alpha;
    cert.method = BoundMethod::conditional_spherical;
    cert.slack_epsilon = slack_epsilon;
    cert.gd_value = gd.value;
    cert.q_star = gd.q_star;
    cert.rate = kLn2 + gd.value + slack_epsilon;
    cert.conclusion = cert.rate < 0.0 ? BoundConclusion::bound_holds
                                      : BoundConclusion::inconclusive;
    return cert;
}

double capacity_upper_bound(double slack_epsilon, const QuadratureSpec& spec,
                            double root_tol) {
    if (!(slack_epsilon >= 0.0)) {
        throw DomainError("slack_epsilon must be >= 0");
    }
    if (!(root_tol > 0.0)) throw DomainError("root_tol must be positive");
    double lo = 0.8;
    double hi = 0.9;
    const double opt_tol = std::min(1e-8, root_tol);
    const auto rate = [&](double a) {
        return kLn2 + gd_min(a, spec, opt_tol).value + slack_epsilon;
    };
    if (!(rate(lo) > 0.0) || !(rate(hi) < 0.0)) {
        throw BracketError(
            "capacity_upper_bound: rates at [.8, .9] do not straddle zero");
    }
    while (hi - lo > 2.0 * root_tol) {
        const double mid = 0.5 * (lo + hi);
        if (rate(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace plab
