#include "plab/gardner_derrida.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace plab {

namespace {

constexpr double kLn2 = std::numbers::ln2;

// Coarse q grid for bracketing the minimum: step .01 on [0, .99], then a
// geometric approach to the clamp so basins that drift toward q = 1 as
// alpha -> 2 are still bracketed.
std::vector<double> coarse_q_grid() {
    std::vector<double> qs;
    qs.reserve(107);
    for (int i = 0; i <= 99; ++i) qs.push_back(0.01 * i);
    for (double eps = 1e-3; eps > 2e-9; eps *= 0.1) qs.push_back(1.0 - eps);
    qs.push_back(kGdQHi);
    return qs;
}

double golden_section(const std::function<double(double)>& f, double a,
                      double b, double tol, long& evals) {
    constexpr double invphi = 0.6180339887498948482;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c);
    double fd = f(d);
    evals += 2;
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
        ++evals;
    }
    return 0.5 * (a + b);
}

}  // namespace

double gd_at(const GdPoint& point, const QuadratureSpec& spec) {
    if (!(point.alpha > 0.0) || !(point.alpha < 2.0)) {
        throw DomainError("gd_at requires alpha in (0, 2)");
    }
    if (!(point.q >= kGdQLo) || point.q > kGdQHi) {
        throw DomainError("gd_at requires q in [0, 1 - 1e-9]");
    }
    if (point.q == 0.0) return -point.alpha * kLn2;
    const double e = expected_log_tail(point.q, spec).value;
    return point.alpha * e + point.q / (2.0 * (1.0 - point.q)) +
           0.5 * std::log1p(-point.q);
}

GdEvaluation gd_min(double alpha, const QuadratureSpec& spec, double opt_tol) {
    if (!(alpha > 0.0) || !(alpha < 2.0)) {
        throw DomainError("gd_min requires alpha in (0, 2)");
    }
    if (!(opt_tol > 0.0)) throw DomainError("opt_tol must be positive");

    GdEvaluation eval;
    eval.alpha = alpha;

    const std::function<double(double)> objective = [&](double q) {
        return gd_at(GdPoint{alpha, q}, spec);
    };

    static const std::vector<double> grid = coarse_q_grid();
    std::size_t best = 0;
    double best_val = objective(grid[0]);
    eval.evaluations = 1;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double v = objective(grid[i]);
        ++eval.evaluations;
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }

    const double lo = (best == 0) ? grid[0] : grid[best - 1];
    const double hi = (best + 1 == grid.size()) ? grid[best] : grid[best + 1];
    eval.q_star =
        (lo == hi) ? lo : golden_section(objective, lo, hi, opt_tol,
                                         eval.evaluations);
    eval.value = objective(eval.q_star);
    ++eval.evaluations;
    // Keep the grid minimum if golden-section refinement did not improve on
    // it (possible when the basin straddles two grid cells).
    if (best_val < eval.value) {
        eval.q_star = grid[best];
        eval.value = best_val;
    }
    eval.margin_vs_log2 = eval.value + kLn2;
    eval.boundary_minimum =
        (best + 1 == grid.size()) && (kGdQHi - eval.q_star < 1e-6);
    return eval;
}

double critical_alpha(const QuadratureSpec& spec, double root_tol) {
    if (!(root_tol > 0.0)) throw DomainError("root_tol must be positive");
    double lo = 0.8;
    double hi = 0.9;
    const double opt_tol = std::min(1e-8, root_tol);
    const double f_lo = gd_min(lo, spec, opt_tol).margin_vs_log2;
    const double f_hi = gd_min(hi, spec, opt_tol).margin_vs_log2;
    if (!(f_lo > 0.0) || !(f_hi < 0.0)) {
        throw BracketError(
            "critical_alpha: margins at [.8, .9] do not straddle zero");
    }
    while (hi - lo > 2.0 * root_tol) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = gd_min(mid, spec, opt_tol).margin_vs_log2;
        if (f_mid > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

PropositionReport proposition_report(const QuadratureSpec& spec) {
    PropositionReport rep;
    rep.alpha = 0.847;
    rep.closed_form_margin = rep.alpha - 0.5 * (1.0 + std::log(0.5)) - kLn2;
    rep.minimized = gd_min(rep.alpha, spec);
    rep.minimized_margin = -rep.minimized.margin_vs_log2;
    return rep;
}

double proposition_margin(const QuadratureSpec& spec) {
    return proposition_report(spec).minimized_margin;
}

}  // namespace plab
