#ifndef PLAB_GARDNER_DERRIDA_HPP
#define PLAB_GARDNER_DERRIDA_HPP

#include "plab/quadrature.hpp"

namespace plab {

// Replica-symmetric free-energy functional of the spherical perceptron,
//   GD(alpha, q) = alpha E[ln H(U sqrt(q/(1-q)))] + q/(2(1-q)) + ln(1-q)/2,
// its minimum over the overlap q, and the critical constraint density where
// the minimum crosses -ln 2.

// q is minimized over [kGdQLo, kGdQHi]; GD diverges to +inf as q -> 1 for
// alpha < 2, so the clamp never clips a true interior minimizer (guarded by
// the boundary_minimum flag).
inline constexpr double kGdQLo = 0.0;
inline constexpr double kGdQHi = 1.0 - 1e-9;

struct GdPoint {
    double alpha = 0.0;  // constraint density, valid in (0, 2)
    double q = 0.0;      // overlap, valid in [kGdQLo, kGdQHi]
};

struct GdEvaluation {
    double alpha = 0.0;
    double q_star = 0.0;          // argmin over q
    double value = 0.0;           // GD(alpha) = min_q GD(alpha, q)
    double margin_vs_log2 = 0.0;  // value + ln 2; negative means the bound binds
    long evaluations = 0;         // objective calls spent
    bool boundary_minimum = false;  // minimum pinned at kGdQHi
};

// GD(alpha, q). Throws DomainError outside the stated ranges; propagates
// quadrature NonConvergenceError.
double gd_at(const GdPoint& point, const QuadratureSpec& spec);

// min_q GD(alpha, q): coarse grid (step .01, geometrically refined toward
// q = 1) to bracket the basin, then golden-section to |q - q*| <= opt_tol.
GdEvaluation gd_min(double alpha, const QuadratureSpec& spec,
                    double opt_tol = 1e-8);

// The root alpha* of gd_min(alpha).value = -ln 2, located by bisection on
// [.8, .9] (gd_min is strictly decreasing in alpha, so the root is unique
// there). Throws BracketError if the endpoints do not straddle.
double critical_alpha(const QuadratureSpec& spec, double root_tol);

struct PropositionReport {
    double alpha = 0.847;
    // Closed-form margin at q = 1/2: alpha - (1 + ln(1/2))/2 - ln 2.
    // (E[ln H(U)] = -1 exactly, so GD(alpha, 1/2) = -alpha + (1 + ln(1/2))/2.)
    double closed_form_margin = 0.0;
    // -(gd_min(alpha).value + ln 2); at least the closed-form margin.
    double minimized_margin = 0.0;
    GdEvaluation minimized;
};

// Margin by which GD(.847) sits below -ln 2 (positive when the bound binds).
double proposition_margin(const QuadratureSpec& spec);
PropositionReport proposition_report(const QuadratureSpec& spec);

}  // namespace plab

#endif  // PLAB_GARDNER_DERRIDA_HPP
