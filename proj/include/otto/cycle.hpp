#pragma once

// Exact finite-temperature thermodynamics of a four-stroke quantum Otto cycle
// with a harmonic-oscillator working medium (units: hbar = k_B = 1).
//
// The cycle alternates two driven strokes (frequency omega_c <-> omega_h) with
// two full thermalizations (cold bath at beta_c, hot bath at beta_h).  Driving
// speed enters only through one dimensionless number per stroke: the
// adiabaticity factor lambda >= 1 (1 = quasi-static, larger = more diabatic).

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace otto {

namespace detail {

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

inline void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string(name) + " must be finite");
    }
}

}  // namespace detail

// coth(x) for x > 0, stable at both ends of the range: the expm1 form keeps
// full precision for small x (coth ~ 1/x + x/3), and arguments beyond 40 are
// saturated to 1 (the true value differs by < 1e-34 there), so beta*omega
// products up to 1e6 and beyond stay finite.
inline double coth(double x) {
    detail::require_finite(x, "coth argument");
    detail::require(x > 0.0, "coth: argument must be > 0");
    if (x > 40.0) return 1.0;
    return 1.0 + 2.0 / std::expm1(2.0 * x);
}

// Inverse temperatures of the two baths.  The cold bath is the colder one,
// so beta_c >= beta_h; equality (tau = 1) is allowed and gives a degenerate
// cycle with no engine window.
struct BathPair {
    double beta_c;
    double beta_h;

    BathPair(double cold, double hot) : beta_c(cold), beta_h(hot) {
        detail::require_finite(cold, "beta_c");
        detail::require_finite(hot, "beta_h");
        detail::require(cold > 0.0 && hot > 0.0, "BathPair: inverse temperatures must be > 0");
        detail::require(cold >= hot, "BathPair: beta_c must be >= beta_h (cold bath is colder)");
    }

    // Bath-temperature ratio T_c/T_h = beta_h/beta_c, in (0, 1].
    double tau() const { return beta_h / beta_c; }
};

// Trap frequencies at the two ends of the drive, 0 < omega_c <= omega_h.
struct FrequencyPair {
    double omega_c;
    double omega_h;

    FrequencyPair(double low, double high) : omega_c(low), omega_h(high) {
        detail::require_finite(low, "omega_c");
        detail::require_finite(high, "omega_h");
        detail::require(low > 0.0, "FrequencyPair: omega_c must be > 0");
        detail::require(high >= low, "FrequencyPair: omega_h must be >= omega_c");
    }

    // Frequency ratio omega_c/omega_h, in (0, 1].
    double z() const { return omega_c / omega_h; }
};

// Adiabaticity factors of the two driven strokes.  Each is >= 1; 1 means the
// stroke is quasi-static, (omega_c^2 + omega_h^2)/(2 omega_c omega_h) is the
// instantaneous-quench value for the pair.
struct AdiabaticityPair {
    double compression;  // omega_c -> omega_h stroke
    double expansion;    // omega_h -> omega_c stroke

    AdiabaticityPair(double comp, double exp) : compression(comp), expansion(exp) {
        detail::require_finite(comp, "compression adiabaticity");
        detail::require_finite(exp, "expansion adiabaticity");
        detail::require(comp >= 1.0 && exp >= 1.0,
                        "AdiabaticityPair: adiabaticity factors must be >= 1");
    }
};

// Mean oscillator energies at the four cycle corners.
struct StrokeEnergies {
    double cold_eq;           // equilibrium with the cold bath at omega_c
    double post_compression;  // right after the omega_c -> omega_h drive
    double hot_eq;            // equilibrium with the hot bath at omega_h
    double post_expansion;    // right after the omega_h -> omega_c drive
};

// Net heats and work of one full cycle.  Sign convention: q_hot / q_cold are
// the heats absorbed *by the medium* from the hot / cold bath, w_ext is the
// work delivered to the outside; w_ext = q_hot + q_cold is the first law and
// holds bit-for-bit by construction.  eta is present only in the engine
// regime (w_ext > 0 and q_hot > 0).
struct CycleOutcome {
    double q_hot;
    double q_cold;
    double w_ext;
    std::optional<double> eta;
};

// Thrown when an efficiency is requested outside the engine regime; callers
// that can meet non-engine operation should classify the mode instead.
struct not_an_engine : std::domain_error {
    using std::domain_error::domain_error;
};

inline StrokeEnergies stroke_energies(const FrequencyPair& freq, const BathPair& bath,
                                      const AdiabaticityPair& lam) {
    const double coth_c = coth(bath.beta_c * freq.omega_c / 2.0);
    const double coth_h = coth(bath.beta_h * freq.omega_h / 2.0);
    return StrokeEnergies{
        freq.omega_c / 2.0 * coth_c,
        freq.omega_h / 2.0 * lam.compression * coth_c,
        freq.omega_h / 2.0 * coth_h,
        freq.omega_c / 2.0 * lam.expansion * coth_h,
    };
}

inline CycleOutcome heats_and_work(const FrequencyPair& freq, const BathPair& bath,
                                   const AdiabaticityPair& lam) {
    const StrokeEnergies e = stroke_energies(freq, bath, lam);
    CycleOutcome out{};
    out.q_hot = e.hot_eq - e.post_compression;
    out.q_cold = e.cold_eq - e.post_expansion;
    out.w_ext = out.q_hot + out.q_cold;
    if (out.w_ext > 0.0 && out.q_hot > 0.0) {
        out.eta = out.w_ext / out.q_hot;
    }
    return out;
}

inline double efficiency(const CycleOutcome& outcome) {
    if (!outcome.eta) {
        throw not_an_engine(
            "efficiency: cycle is not in the engine regime (needs w_ext > 0 and q_hot > 0)");
    }
    return *outcome.eta;
}

}  // namespace otto
