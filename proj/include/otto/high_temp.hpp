#pragma once

// High-temperature (classical) limit of the asymmetric Otto cycles.  With
// beta*omega -> 0 everything collapses onto two reduced parameters
// z = omega_c/omega_h and tau = beta_h/beta_c, heats and work are quoted in
// units of 1/beta_h, and the optimum frequency ratio obeys a cubic that is
// solvable in closed (trigonometric) form.  This header carries those closed
// forms: per-scheme reduced quantities, the optimal-z root, the efficiency
// bounds, the efficiency-at-maximum-work curves, their small-eta_C series,
// and the special crossing points between the two driving orders.

#include <array>
#include <cmath>
#include <optional>

#include "otto/cubic.hpp"
#include "otto/cycle.hpp"

namespace otto {

// Driving order of the two strokes: quasi-static or quenched per stroke.
enum class Scheme {
    adiabatic,           // both strokes quasi-static
    sudden_expansion,    // compression quasi-static, expansion quenched
    sudden_compression,  // compression quenched, expansion quasi-static
    sudden_switch,       // both strokes quenched
};

// Reduced coordinates of the high-temperature limit.
struct ReducedParams {
    double z;    // omega_c / omega_h, in (0, 1]
    double tau;  // T_c / T_h = beta_h / beta_c, in (0, 1]

    ReducedParams(double z_, double tau_) : z(z_), tau(tau_) {
        detail::require_finite(z_, "z");
        detail::require_finite(tau_, "tau");
        detail::require(z_ > 0.0 && z_ <= 1.0, "ReducedParams: z must lie in (0, 1]");
        detail::require(tau_ > 0.0 && tau_ <= 1.0, "ReducedParams: tau must lie in (0, 1]");
    }
};

// Reduced heats/work of one cycle, all in units of 1/beta_h.  eta is present
// only in the engine regime (w > 0 and q_hot > 0).
struct HtQuantities {
    double w;
    double q_hot;
    double q_cold;
    std::optional<double> eta;
};

inline HtQuantities ht_quantities(Scheme scheme, const ReducedParams& p) {
    const double z = p.z, tau = p.tau;
    // Quenching a stroke costs extra work that shows up against the adjacent
    // bath: a quenched expansion degrades q_cold, a quenched compression
    // degrades q_hot.
    const double q_hot_static = 1.0 - tau / z;
    const double q_hot_quench = 1.0 - (1.0 + z * z) * tau / (2.0 * z * z);
    const double q_cold_static = tau - z;
    const double q_cold_quench = tau - (1.0 + z * z) / 2.0;

    HtQuantities out{};
    switch (scheme) {
        case Scheme::adiabatic:
            out.q_hot = q_hot_static;
            out.q_cold = q_cold_static;
            break;
        case Scheme::sudden_expansion:
            out.q_hot = q_hot_static;
            out.q_cold = q_cold_quench;
            break;
        case Scheme::sudden_compression:
            out.q_hot = q_hot_quench;
            out.q_cold = q_cold_static;
            break;
        case Scheme::sudden_switch:
            out.q_hot = q_hot_quench;
            out.q_cold = q_cold_quench;
            break;
    }
    out.w = out.q_hot + out.q_cold;
    if (out.w > 0.0 && out.q_hot > 0.0) {
        out.eta = out.w / out.q_hot;
    }
    return out;
}

// ---- optimal frequency ratio and efficiency bounds, SE order ----

// Shared trigonometric building blocks of the two bound curves.  k_aux feeds
// the SE bound (optimal z = tau/2 + k_aux), b_aux the SC bound.
struct TrigAuxiliaries {
    double k_aux;
    double b_aux;
};

inline TrigAuxiliaries trig_auxiliaries(double tau) {
    detail::require_finite(tau, "tau");
    detail::require(tau > 0.0 && tau <= 1.0, "trig_auxiliaries: tau must lie in (0, 1]");
    // k_aux: the arccos argument leaves [-1, 1] for tau < 1/2, where the
    // expression continues analytically through cosh(acosh/3); a narrow band
    // around arg = 1 routes to the repeated-root value k_aux = tau.
    const double arg = ((tau - 4.0) * tau + 2.0) / (tau * tau);
    double k;
    if (std::abs(arg - 1.0) < 1e-9) {
        k = tau;
    } else if (arg > 1.0) {
        k = tau * std::cosh(std::acosh(arg) / 3.0);
    } else {
        k = tau * std::cos(std::acos(std::max(arg, -1.0)) / 3.0);
    }
    const double b = std::acos(-std::sqrt((2.0 - tau) * tau)) / 3.0;
    return TrigAuxiliaries{k, b};
}

// Frequency ratio that maximizes the SE efficiency at fixed tau; the largest
// real root of 2 z^3 - 3 tau z^2 + tau (2 tau - 1) = 0, which always lies in
// the engine window.
inline double zstar_se(double tau) {
    const double z = tau / 2.0 + trig_auxiliaries(tau).k_aux;
    return std::min(z, 1.0);
}

// Maximal SE efficiency at fixed tau (the SE efficiency evaluated at
// zstar_se, in closed form).  tau = 1 returns the limiting value 0.
inline double eta_up_se(double tau) {
    if (tau == 1.0) return 0.0;
    const double k = trig_auxiliaries(tau).k_aux;
    return (2.0 * k + tau - 2.0) *
           (4.0 * k * k + 4.0 * k * (1.0 + tau) - (6.0 - tau) * tau) /
           (8.0 * tau - 16.0 * k);
}

// SE efficiency at the work-maximizing ratio z = tau^(1/3), as a function of
// the Carnot efficiency eta_c = 1 - tau.
inline double eta_mw_se(double eta_c) {
    detail::require_finite(eta_c, "eta_c");
    detail::require(eta_c >= 0.0 && eta_c < 1.0, "eta_mw_se: eta_c must lie in [0, 1)");
    if (eta_c == 0.0) return 0.0;
    const double u = std::cbrt(1.0 - eta_c);
    return (3.0 * u - 2.0 * eta_c * u + 3.0 * eta_c - 3.0) / (2.0 * (u + eta_c - 1.0));
}

// ---- same two curves for the SC order ----

// Maximal SC efficiency at fixed tau.  tau = 1 returns the limiting value 0;
// tau -> 0 approaches 1.
inline double eta_up_sc(double tau) {
    if (tau == 1.0) return 0.0;
    const double b = trig_auxiliaries(tau).b_aux;
    const double cb = std::cos(b);
    const double num = 2.0 - tau + 16.0 * std::sqrt(tau / (2.0 - tau)) * cb * cb * cb -
                       4.0 * (2.0 + tau) * cb * cb;
    const double den = (tau - 2.0) * (2.0 * std::cos(2.0 * b) + 1.0);
    return num / den;
}

inline double eta_mw_sc(double eta_c) {
    detail::require_finite(eta_c, "eta_c");
    detail::require(eta_c >= 0.0 && eta_c < 1.0, "eta_mw_sc: eta_c must lie in [0, 1)");
    if (eta_c == 0.0) return 0.0;
    const double u = std::cbrt(1.0 - eta_c);
    return -(4.0 * (u + u * u - 2.0) + eta_c * (4.0 * u + eta_c - 1.0)) /
           (4.0 + eta_c * (eta_c + 3.0));
}

// ---- small-eta_C series of the four curves ----

enum class BoundCurve {
    upper_se,    // eta_up_se as a function of eta_c
    upper_sc,    // eta_up_sc as a function of eta_c
    maxwork_se,  // eta_mw_se
    maxwork_sc,  // eta_mw_sc
};

// First three Taylor coefficients about eta_c = 0:
// eta(eta_c) = c1 eta_c + c2 eta_c^2 + c3 eta_c^3 + ...
// The upper bounds start at (2 - sqrt3) eta_c, both efficiency-at-maximum-work
// curves at the familiar eta_c/4; the SC quadratic term is exactly twice the
// SE one.
inline std::array<double, 3> taylor_coefficients(BoundCurve curve) {
    const double sq3 = std::sqrt(3.0);
    switch (curve) {
        case BoundCurve::upper_se:
            return {2.0 - sq3, sq3 - 5.0 / 3.0, 1.0 / (18.0 * sq3)};
        case BoundCurve::upper_sc:
            return {2.0 - sq3, 2.0 / 3.0 * (3.0 * sq3 - 5.0), (252.0 - 143.0 * sq3) / 54.0};
        case BoundCurve::maxwork_se:
            return {0.25, 5.0 / 72.0, 5.0 / 144.0};
        case BoundCurve::maxwork_sc:
            return {0.25, 17.0 / 144.0, 41.0 / 576.0};
    }
    throw std::invalid_argument("taylor_coefficients: unknown curve");
}

// ---- crossings between the SE and SC families at fixed tau ----

// The two work curves always cross at z = sqrt(tau) with a common value
// (1 - sqrt(tau))^2 / 2; the two efficiency curves cross once inside the
// engine window, at the same height as the sudden-switch efficiency maximum;
// and both work curves peak at z = tau^(1/3).
struct Intersections {
    double z_work_cross;
    double work_at_cross;
    double z_eta_cross;
    double eta_at_cross;
    double z_max_work;
};

inline Intersections intersections(double tau) {
    detail::require_finite(tau, "tau");
    detail::require(tau > 0.0 && tau <= 1.0, "intersections: tau must lie in (0, 1]");
    const double root_tau = std::sqrt(tau);
    const double eta_c = 1.0 - tau;
    Intersections out{};
    out.z_work_cross = root_tau;
    out.work_at_cross = (1.0 - root_tau) * (1.0 - root_tau) / 2.0;
    out.z_eta_cross = (tau + std::sqrt(2.0 * tau) * (1.0 - tau)) / (2.0 - tau);
    out.eta_at_cross = (3.0 - 2.0 * std::sqrt(2.0 * (1.0 - eta_c)) - eta_c) * eta_c /
                       ((1.0 + eta_c) * (1.0 + eta_c));
    out.z_max_work = std::cbrt(tau);
    return out;
}

}  // namespace otto
