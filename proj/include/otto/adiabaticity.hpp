#pragma once

// Adiabaticity factor of a single frequency sweep omega(t), computed two ways:
// the closed form for an instantaneous quench, and a numeric oracle that
// integrates the classical equation of motion x'' + omega(t)^2 x = 0 for an
// arbitrary protocol.  For any protocol, lambda >= 1, with equality reached in
// the quasi-static limit.

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>

#include "otto/cycle.hpp"

namespace otto {

// Instantaneous-quench value (omega_i^2 + omega_f^2) / (2 omega_i omega_f).
// Symmetric under swapping the endpoints, so both sweep directions accept
// their natural argument order.
inline double lambda_sudden(double omega_start, double omega_end) {
    detail::require_finite(omega_start, "omega_start");
    detail::require_finite(omega_end, "omega_end");
    detail::require(omega_start > 0.0 && omega_end > 0.0,
                    "lambda_sudden: frequencies must be > 0");
    return (omega_start * omega_start + omega_end * omega_end) /
           (2.0 * omega_start * omega_end);
}

inline double lambda_sudden(const FrequencyPair& freq) {
    return lambda_sudden(freq.omega_c, freq.omega_h);
}

// A frequency sweep over [0, duration].  omega_of_t must match the declared
// endpoints (checked to 1e-9 relative) and stay positive; positivity is
// enforced at every integration sample point.
struct FrequencyProtocol {
    double duration;
    double omega_start;
    double omega_end;
    std::function<double(double)> omega_of_t;

    FrequencyProtocol(double T, double w0, double w1, std::function<double(double)> omega)
        : duration(T), omega_start(w0), omega_end(w1), omega_of_t(std::move(omega)) {
        detail::require_finite(T, "duration");
        detail::require(T > 0.0, "FrequencyProtocol: duration must be > 0");
        detail::require_finite(w0, "omega_start");
        detail::require_finite(w1, "omega_end");
        detail::require(w0 > 0.0 && w1 > 0.0, "FrequencyProtocol: endpoint frequencies must be > 0");
        detail::require(static_cast<bool>(omega_of_t), "FrequencyProtocol: omega_of_t must be callable");
        detail::require(std::abs(omega_of_t(0.0) - w0) <= 1e-9 * w0,
                        "FrequencyProtocol: omega_of_t(0) must equal omega_start");
        detail::require(std::abs(omega_of_t(T) - w1) <= 1e-9 * w1,
                        "FrequencyProtocol: omega_of_t(duration) must equal omega_end");
    }
};

inline FrequencyProtocol linear_ramp(double omega_start, double omega_end, double duration) {
    return FrequencyProtocol(duration, omega_start, omega_end,
                             [omega_start, omega_end, duration](double t) {
                                 return omega_start + (omega_end - omega_start) * (t / duration);
                             });
}

inline FrequencyProtocol exponential_ramp(double omega_start, double omega_end, double duration) {
    detail::require(omega_start > 0.0 && omega_end > 0.0,
                    "exponential_ramp: frequencies must be > 0");
    const double log_ratio = std::log(omega_end / omega_start);
    return FrequencyProtocol(duration, omega_start, omega_end,
                             [omega_start, log_ratio, duration](double t) {
                                 return omega_start * std::exp(log_ratio * (t / duration));
                             });
}

// Jump at mid-protocol.  The jump instant does not matter analytically: the
// resulting lambda equals lambda_sudden for every duration, which makes this
// a useful cross-check protocol.
inline FrequencyProtocol sudden_step(double omega_start, double omega_end, double duration) {
    return FrequencyProtocol(duration, omega_start, omega_end,
                             [omega_start, omega_end, duration](double t) {
                                 return t < duration / 2.0 ? omega_start : omega_end;
                             });
}

// Fixed-step classic fourth-order Runge-Kutta is the only method offered; the
// tag exists so configs are explicit about it.
enum class IntegratorMethod { rk4_fixed };

struct IntegratorConfig {
    std::size_t step_count = 100000;
    IntegratorMethod method = IntegratorMethod::rk4_fixed;
};

// Result of the numeric lambda evaluation.  `value` comes from the doubled
// step count; `refine_delta` is the change when going from step_count to
// 2*step_count, and the run counts as converged when that change is <= 1e-6.
struct LambdaEstimate {
    double value;
    double refine_delta;
    bool converged;
};

namespace detail {

// One RK4 pass over the protocol, propagating the two fundamental solutions
// X (x=0, v=1) and Y (x=1, v=0) of x'' = -omega(t)^2 x simultaneously.
inline double lambda_rk4_pass(const FrequencyProtocol& p, std::size_t n) {
    const double h = p.duration / static_cast<double>(n);
    const auto omega_sq = [&p](double t) {
        const double w = p.omega_of_t(t);
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw std::invalid_argument("lambda_numeric: omega_of_t must stay positive and finite");
        }
        return w * w;
    };
    double x1 = 0.0, v1 = 1.0;  // X
    double x2 = 1.0, v2 = 0.0;  // Y
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) * h;
        const double w2a = omega_sq(t);
        const double w2b = omega_sq(t + 0.5 * h);
        const double w2c = omega_sq(t + h);

        const double k1x = v1, k1v = -w2a * x1;
        const double l1x = v2, l1v = -w2a * x2;
        const double k2x = v1 + 0.5 * h * k1v, k2v = -w2b * (x1 + 0.5 * h * k1x);
        const double l2x = v2 + 0.5 * h * l1v, l2v = -w2b * (x2 + 0.5 * h * l1x);
        const double k3x = v1 + 0.5 * h * k2v, k3v = -w2b * (x1 + 0.5 * h * k2x);
        const double l3x = v2 + 0.5 * h * l2v, l3v = -w2b * (x2 + 0.5 * h * l2x);
        const double k4x = v1 + h * k3v, k4v = -w2c * (x1 + h * k3x);
        const double l4x = v2 + h * l3v, l4v = -w2c * (x2 + h * l3x);

        x1 += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        v1 += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        x2 += h / 6.0 * (l1x + 2.0 * l2x + 2.0 * l3x + l4x);
        v2 += h / 6.0 * (l1v + 2.0 * l2v + 2.0 * l3v + l4v);
    }
    const double wi = p.omega_start, wf = p.omega_end;
    return (wi * wi * (wf * wf * x1 * x1 + v1 * v1) + wf * wf * x2 * x2 + v2 * v2) /
           (2.0 * wi * wf);
}

}  // namespace detail

inline LambdaEstimate lambda_numeric(const FrequencyProtocol& protocol,
                                     const IntegratorConfig& config = {}) {
    detail::require(config.step_count >= 100, "lambda_numeric: step_count must be >= 100");
    const double coarse = detail::lambda_rk4_pass(protocol, config.step_count);
    const double fine = detail::lambda_rk4_pass(protocol, 2 * config.step_count);
    const double delta = std::abs(fine - coarse);
    return LambdaEstimate{fine, delta, delta <= 1e-6};
}

}  // namespace otto
