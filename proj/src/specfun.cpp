#include "plab/specfun.hpp"

#include <cmath>
#include <limits>

namespace plab {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779399461;  // 1/sqrt(2*pi)
constexpr double kInvSqrt2 = 0.7071067811865475244008444;    // 1/sqrt(2)
constexpr double kLogSqrt2Pi = 0.9189385332046727417803297;  // ln(sqrt(2*pi))

// Switch point between the direct-log and Mills-ratio branches of
// log_gauss_tail. Both branches agree to 1e-12 relative in [5, 7].
constexpr double kMillsBranch = 6.0;

// Laplace continued fraction for the Mills ratio,
//   R(x) = 1/(x + 1/(x + 2/(x + 3/(x + ...)))),
// evaluated with the modified Lentz algorithm (Numerical Recipes 5.2).
// Converges to double precision in < 40 levels for x >= 6.
double mills_cf(double x) {
    const double tiny = 1e-300;
    const double eps = 1e-17;
    double f = x;  // b0 = x
    double c = f;
    double d = 0.0;
    for (int k = 1; k < 200; ++k) {
        const double a = static_cast<double>(k);  // a_k = k
        d = x + a * d;
        if (d == 0.0) d = tiny;
        c = x + a / c;
        if (c == 0.0) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::fabs(delta - 1.0) < eps) break;
    }
    return 1.0 / f;
}

}  // namespace

double gauss_pdf(double x) {
    return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

double gauss_cdf(double x) {
    return 0.5 * std::erfc(-x * kInvSqrt2);
}

double gauss_tail(double x) {
    return 0.5 * std::erfc(x * kInvSqrt2);
}

double log_gauss_tail(double x) {
    if (x <= 0.0) {
        // H(x) = 1 - H(-x); log1p keeps precision when H(-x) is tiny.
        return std::log1p(-gauss_tail(-x));
    }
    if (x <= kMillsBranch) {
        return std::log(gauss_tail(x));
    }
    // ln H = ln(phi(x) R(x)) = -x^2/2 - ln(sqrt(2 pi)) + ln R(x)
    return -0.5 * x * x - kLogSqrt2Pi + std::log(mills_cf(x));
}

double mills_ratio(double x) {
    if (x > kMillsBranch) return mills_cf(x);
    // Direct quotient; for x < ~-38.6 phi underflows to 0 and the quotient
    // is +inf, matching the magnitude of the true (unrepresentable) value.
    return gauss_tail(x) / gauss_pdf(x);
}

}  // namespace plab
