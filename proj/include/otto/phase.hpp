#pragma once

// Operational-mode classification over the reduced (tau, z) plane for the two
// asymmetric driving orders, with the closed-form region boundaries and a
// grid rasterizer for phase diagrams.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "otto/high_temp.hpp"
#include "otto/parallel.hpp"

namespace otto {

// Any flux within this distance of zero makes the point a boundary point.
inline constexpr double kModeSignTolerance = 1e-12;

enum class OperationalMode {
    engine,        // w > 0, q_hot > 0, q_cold < 0
    refrigerator,  // w < 0, q_hot < 0, q_cold > 0
    heater,        // w < 0, q_hot < 0, q_cold < 0
    accelerator,   // w < 0, q_hot > 0, q_cold < 0
    boundary,      // some flux is (numerically) zero
};

inline const char* mode_name(OperationalMode m) {
    switch (m) {
        case OperationalMode::engine: return "engine";
        case OperationalMode::refrigerator: return "refrigerator";
        case OperationalMode::heater: return "heater";
        case OperationalMode::accelerator: return "accelerator";
        case OperationalMode::boundary: return "boundary";
    }
    throw std::invalid_argument("mode_name: unknown mode");
}

// Classify a sign triple (w, q_hot, q_cold).  The four non-boundary rows are
// exhaustive for this cycle family: combinations outside them (for instance
// work extracted while dumping heat into the hot bath) cannot occur, and
// hitting one indicates a caller bug, not a physical regime.
inline OperationalMode mode_from_signs(double w, double q_hot, double q_cold,
                                       double tol = kModeSignTolerance) {
    detail::require_finite(w, "w");
    detail::require_finite(q_hot, "q_hot");
    detail::require_finite(q_cold, "q_cold");
    if (std::abs(w) <= tol || std::abs(q_hot) <= tol || std::abs(q_cold) <= tol) {
        return OperationalMode::boundary;
    }
    if (w > 0.0) {
        if (q_hot > 0.0 && q_cold < 0.0) return OperationalMode::engine;
        throw std::domain_error("mode_from_signs: sign triple outside the four operational rows");
    }
    if (q_cold > 0.0) {
        if (q_hot < 0.0) return OperationalMode::refrigerator;
        throw std::domain_error("mode_from_signs: sign triple outside the four operational rows");
    }
    return q_hot < 0.0 ? OperationalMode::heater : OperationalMode::accelerator;
}

namespace detail {

inline void require_asym_scheme(Scheme scheme, const char* who) {
    require(scheme == Scheme::sudden_expansion || scheme == Scheme::sudden_compression,
            std::string(who) + ": scheme must be sudden_expansion or sudden_compression");
}

}  // namespace detail

inline OperationalMode classify(Scheme scheme, const ReducedParams& p) {
    detail::require_asym_scheme(scheme, "classify");
    const HtQuantities q = ht_quantities(scheme, p);
    return mode_from_signs(q.w, q.q_hot, q.q_cold);
}

struct Interval {
    double lo;
    double hi;
};

// Closed-form mode boundaries along z at fixed tau.  The engine occupies
// z >= engine_min_z; the refrigerator z <= refrigerator_max_z (absent for the
// SE order below tau = 1/2, where no frequency ratio refrigerates); heater
// and accelerator fill the bands in between.
struct RegionBoundaries {
    double engine_min_z;
    std::optional<double> refrigerator_max_z;
    Interval heater;
    Interval accelerator;
};

inline RegionBoundaries region_boundaries(Scheme scheme, double tau) {
    detail::require_asym_scheme(scheme, "region_boundaries");
    detail::require_finite(tau, "tau");
    detail::require(tau > 0.0 && tau <= 1.0, "region_boundaries: tau must lie in (0, 1]");
    RegionBoundaries out{};
    if (scheme == Scheme::sudden_expansion) {
        out.engine_min_z = (std::sqrt(8.0 * tau + 1.0) - 1.0) / 2.0;
        if (tau >= 0.5) {
            out.refrigerator_max_z = std::sqrt(2.0 * tau - 1.0);
        }
        out.heater = Interval{std::sqrt(std::max(2.0 * tau - 1.0, 0.0)), tau};
        out.accelerator = Interval{tau, out.engine_min_z};
    } else {
        out.engine_min_z = (std::sqrt(tau * (8.0 + tau)) + tau) / 4.0;
        out.refrigerator_max_z = tau;
        const double heater_hi = std::sqrt(tau / (2.0 - tau));
        out.heater = Interval{tau, heater_hi};
        out.accelerator = Interval{heater_hi, out.engine_min_z};
    }
    return out;
}

// Phase diagram rasterized over an inclusive (tau, z) lattice; modes are laid
// out row-major with tau as the slow axis.
struct PhaseGrid {
    Scheme scheme;
    std::vector<double> tau_values;
    std::vector<double> z_values;
    std::vector<OperationalMode> modes;

    OperationalMode at(std::size_t tau_idx, std::size_t z_idx) const {
        return modes[tau_idx * z_values.size() + z_idx];
    }
};

namespace detail {

inline std::vector<double> inclusive_linspace(double lo, double hi, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    out.back() = hi;
    return out;
}

}  // namespace detail

inline PhaseGrid phase_grid(Scheme scheme, Interval tau_range, Interval z_range,
                            std::size_t resolution, unsigned thread_count = 0) {
    detail::require_asym_scheme(scheme, "phase_grid");
    detail::require(resolution >= 2, "phase_grid: resolution must be >= 2");
    detail::require(tau_range.lo > 0.0 && tau_range.hi < 1.0 && tau_range.lo <= tau_range.hi,
                    "phase_grid: tau range must lie inside (0, 1)");
    detail::require(z_range.lo > 0.0 && z_range.hi <= 1.0 && z_range.lo <= z_range.hi,
                    "phase_grid: z range must lie inside (0, 1]");
    PhaseGrid grid{scheme,
                   detail::inclusive_linspace(tau_range.lo, tau_range.hi, resolution),
                   detail::inclusive_linspace(z_range.lo, z_range.hi, resolution),
                   {}};
    grid.modes.resize(resolution * resolution);
    parallel_for(resolution, thread_count, [&](std::size_t row_begin, std::size_t row_end, unsigned) {
        for (std::size_t i = row_begin; i < row_end; ++i) {
            for (std::size_t j = 0; j < resolution; ++j) {
                grid.modes[i * resolution + j] =
                    classify(scheme, ReducedParams(grid.z_values[j], grid.tau_values[i]));
            }
        }
    });
    return grid;
}

}  // namespace otto
