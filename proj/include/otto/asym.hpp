#pragma once

// Closed forms for the two asymmetrically driven cycles at arbitrary bath
// temperatures: SE (quasi-static compression, sudden expansion) and SC
// (sudden compression, quasi-static expansion).  Everything here is an
// algebraic specialization of the general cycle in cycle.hpp; tests pin the
// two routes against each other.

#include <cmath>

#include "otto/adiabaticity.hpp"
#include "otto/cycle.hpp"

namespace otto {

namespace detail {

struct CothPair {
    double cold;  // coth(beta_c omega_c / 2)
    double hot;   // coth(beta_h omega_h / 2)
};

inline CothPair coth_pair(const FrequencyPair& f, const BathPair& b) {
    return CothPair{coth(b.beta_c * f.omega_c / 2.0), coth(b.beta_h * f.omega_h / 2.0)};
}

}  // namespace detail

// ---- sudden expansion (SE): compression quasi-static, expansion quenched ----

inline double work_se(const FrequencyPair& f, const BathPair& b) {
    const auto [cc, ch] = detail::coth_pair(f, b);
    return (f.omega_h - f.omega_c) *
           ((f.omega_c + f.omega_h) * ch - 2.0 * f.omega_h * cc) / (4.0 * f.omega_h);
}

// Positive-work condition, as a ratio test on the two coth factors (the >=
// form keeps the W = 0 boundary inside the condition).
inline bool pwc_se(const FrequencyPair& f, const BathPair& b) {
    const auto [cc, ch] = detail::coth_pair(f, b);
    return ch / cc >= 2.0 * f.omega_h / (f.omega_c + f.omega_h);
}

inline double eta_se(const FrequencyPair& f, const BathPair& b) {
    const auto [cc, ch] = detail::coth_pair(f, b);
    const double num =
        (f.omega_h - f.omega_c) * ((f.omega_c + f.omega_h) * ch - 2.0 * f.omega_h * cc);
    const double q_hot = f.omega_h / 2.0 * (ch - cc);
    if (!(num > 0.0) || !(q_hot > 0.0)) {
        throw not_an_engine("eta_se: parameters are outside the engine regime");
    }
    return num / (2.0 * f.omega_h * f.omega_h * (ch - cc));
}

// ---- sudden compression (SC): compression quenched, expansion quasi-static ----

inline double work_sc(const FrequencyPair& f, const BathPair& b) {
    const auto [cc, ch] = detail::coth_pair(f, b);
    return (f.omega_c - f.omega_h) *
           ((f.omega_c + f.omega_h) * cc - 2.0 * f.omega_c * ch) / (4.0 * f.omega_c);
}

inline bool pwc_sc(const FrequencyPair& f, const BathPair& b) {
    const auto [cc, ch] = detail::coth_pair(f, b);
    return (f.omega_c + f.omega_h) * cc <= 2.0 * f.omega_c * ch;
}

inline double eta_sc(const FrequencyPair& f, const BathPair& b) {
    const auto [cc, ch] = detail::coth_pair(f, b);
    const double num =
        (f.omega_c - f.omega_h) * ((f.omega_c + f.omega_h) * cc - 2.0 * f.omega_c * ch);
    // Denominator equals 4 omega_c q_hot with q_hot the post-quench hot heat.
    const double den = 2.0 * f.omega_c * f.omega_h * ch -
                       (f.omega_c * f.omega_c + f.omega_h * f.omega_h) * cc;
    if (!(num > 0.0) || !(den > 0.0)) {
        throw not_an_engine("eta_sc: parameters are outside the engine regime");
    }
    return num / den;
}

}  // namespace otto
