#pragma once

// Real roots of a real cubic a x^3 + b x^2 + c x + d without complex
// arithmetic: depressed-cubic reduction plus the trigonometric form in the
// three-real-root (casus irreducibilis) region and its hyperbolic
// continuations outside it.  Roots come back ascending, listed with
// multiplicity, and are Newton-polished against the original coefficients.

#include <algorithm>
#include <cmath>
#include <vector>

#include "otto/cycle.hpp"

namespace otto {

struct CubicCoefficients {
    double a;
    double b;
    double c;
    double d;

    CubicCoefficients(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {
        detail::require_finite(a_, "cubic a");
        detail::require_finite(b_, "cubic b");
        detail::require_finite(c_, "cubic c");
        detail::require_finite(d_, "cubic d");
        detail::require(a_ != 0.0, "CubicCoefficients: leading coefficient must be nonzero");
    }

    // Sign convention: positive -> three real roots, negative -> one.
    double discriminant() const {
        return 18.0 * a * b * c * d - 4.0 * b * b * b * d + b * b * c * c -
               4.0 * a * c * c * c - 27.0 * a * a * d * d;
    }

    double eval(double x) const { return ((a * x + b) * x + c) * x + d; }
    double eval_deriv(double x) const { return (3.0 * a * x + 2.0 * b) * x + c; }
};

inline std::vector<double> cubic_real_roots(const CubicCoefficients& k) {
    // Monic reduction x^3 + A x^2 + B x + C, then depressed t^3 + p t + q
    // with x = t - A/3.
    const double A = k.b / k.a;
    const double B = k.c / k.a;
    const double C = k.d / k.a;
    const double p = B - A * A / 3.0;
    const double q = 2.0 * A * A * A / 27.0 - A * B / 3.0 + C;
    const double shift = -A / 3.0;

    // Scale-aware zero tests for p and q (triple / degenerate cases).
    const double p_scale = std::max(A * A / 3.0 + std::abs(B), 1e-300);
    const double q_scale =
        std::max(std::abs(A) * A * A / 13.5 + std::abs(A * B) / 3.0 + std::abs(C), 1e-300);
    const bool p_zero = std::abs(p) <= 1e-13 * p_scale;
    const bool q_zero = std::abs(q) <= 1e-13 * q_scale;

    std::vector<double> roots;
    if (p_zero && q_zero) {
        roots.assign(3, shift);  // triple root; nothing to polish
        return roots;
    }

    if (p < 0.0 && !p_zero) {
        const double m = 2.0 * std::sqrt(-p / 3.0);
        // arg = (3q / 2p) sqrt(-3/p); |arg| <= 1 is exactly the
        // three-real-root region.
        const double arg = 3.0 * q / (p * m);
        if (std::abs(arg) <= 1.0 + 1e-12) {
            const double theta = std::acos(std::clamp(arg, -1.0, 1.0)) / 3.0;
            constexpr double two_thirds_pi = 2.0943951023931953;
            roots = {shift + m * std::cos(theta),
                     shift + m * std::cos(theta - two_thirds_pi),
                     shift + m * std::cos(theta - 2.0 * two_thirds_pi)};
        } else {
            // Hyperbolic continuation of the same expression: one real root.
            const double t = m * (arg > 0.0 ? 1.0 : -1.0) *
                             std::cosh(std::acosh(std::abs(arg)) / 3.0);
            roots = {shift + t};
        }
    } else if (p > 0.0 && !p_zero) {
        // Always exactly one real root; sinh branch.
        const double s = 3.0 * std::abs(q) / (2.0 * p) * std::sqrt(3.0 / p);
        const double t = -2.0 * (q > 0.0 ? 1.0 : -1.0) * std::sqrt(p / 3.0) *
                         std::sinh(std::asinh(s) / 3.0);
        roots = {shift + t};
    } else {
        // p ~ 0, q != 0: t^3 = -q.
        roots = {shift + std::cbrt(-q)};
    }

    // Two Newton steps against the original coefficients tighten each root to
    // the working-precision residual floor.
    for (double& r : roots) {
        for (int it = 0; it < 2; ++it) {
            const double fp = k.eval_deriv(r);
            if (std::abs(fp) < 1e-300) break;
            const double step = k.eval(r) / fp;
            if (!std::isfinite(step) || std::abs(step) > 0.1 * std::max(1.0, std::abs(r))) break;
            r -= step;
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace otto
