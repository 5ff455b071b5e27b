#pragma once

// Monte-Carlo verification of the efficiency bounds: sample random frequency
// pairs at fixed bath temperatures, keep the engine-mode ones, and histogram
// their exact efficiencies against the closed-form bound.
//
// Randomness is counter-based (a splitmix64-style mix of seed and draw
// index), so sample i is a pure function of (seed, i): results are
// bit-identical for any worker count and any chunking of the index space.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "otto/asym.hpp"
#include "otto/high_temp.hpp"
#include "otto/parallel.hpp"

namespace otto {

namespace detail {

inline std::uint64_t mix_counter(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t x = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

// Uniform double in [0, 1): top 53 bits of the mixed counter.
inline double uniform01(std::uint64_t seed, std::uint64_t counter) {
    return static_cast<double>(mix_counter(seed, counter) >> 11) * 0x1.0p-53;
}

}  // namespace detail

struct SamplingPlan {
    Scheme scheme;             // sudden_expansion or sudden_compression
    std::uint64_t seed = 1;
    std::uint64_t sample_count = 1000000;
    double beta_c = 1.0;
    double beta_h = 0.1;
    double omega_max = 100.0;  // both frequencies drawn uniformly from (0, omega_max]
    double bin_width = 0.01;
    unsigned thread_count = 0;
};

struct HistogramBin {
    double lo;
    double hi;
    std::uint64_t count;
};

struct Histogram {
    std::vector<HistogramBin> bins;  // contiguous from 0, trimmed after the last hit
    std::uint64_t accepted = 0;      // engine-mode samples
    std::uint64_t rejected = 0;
    std::optional<double> max_eta;   // absent when nothing was accepted
    double bound = 0.0;              // closed-form efficiency bound at the plan's tau
    std::optional<double> margin;    // bound - max_eta
};

inline Histogram sample_efficiencies(const SamplingPlan& plan) {
    detail::require(plan.scheme == Scheme::sudden_expansion ||
                        plan.scheme == Scheme::sudden_compression,
                    "sample_efficiencies: scheme must be sudden_expansion or sudden_compression");
    detail::require(plan.sample_count > 0, "sample_efficiencies: sample_count must be > 0");
    detail::require_finite(plan.omega_max, "omega_max");
    detail::require(plan.omega_max > 0.0, "sample_efficiencies: omega_max must be > 0");
    detail::require_finite(plan.bin_width, "bin_width");
    detail::require(plan.bin_width > 0.0 && plan.bin_width <= 1.0,
                    "sample_efficiencies: bin_width must lie in (0, 1]");
    const BathPair bath(plan.beta_c, plan.beta_h);
    const bool se = plan.scheme == Scheme::sudden_expansion;

    // All efficiencies in this family lie below 1, so this many bins always
    // suffices; the result is trimmed to the last occupied bin.
    const std::size_t max_bins = static_cast<std::size_t>(1.0 / plan.bin_width) + 2;

    struct Partial {
        std::vector<std::uint64_t> counts;
        std::uint64_t accepted = 0;
        std::uint64_t rejected = 0;
        double max_eta = -1.0;
    };
    const unsigned threads = resolve_thread_count(plan.thread_count);
    std::vector<Partial> partials(threads);
    for (auto& p : partials) p.counts.assign(max_bins, 0);

    parallel_for(plan.sample_count, threads,
                 [&](std::size_t begin, std::size_t end, unsigned chunk) {
                     Partial& acc = partials[chunk];
                     for (std::size_t i = begin; i < end; ++i) {
                         const std::uint64_t base = 2 * static_cast<std::uint64_t>(i);
                         // (0, omega_max] draws; the sorted pair assigns the roles.
                         const double wa =
                             plan.omega_max * (1.0 - detail::uniform01(plan.seed, base));
                         const double wb =
                             plan.omega_max * (1.0 - detail::uniform01(plan.seed, base + 1));
                         const double wc = std::min(wa, wb);
                         const double wh = std::max(wa, wb);
                         const double cc = coth(bath.beta_c * wc / 2.0);
                         const double ch = coth(bath.beta_h * wh / 2.0);
                         // Engine predicate (positive work and positive hot
                         // heat), written with the same expressions eta_se /
                         // eta_sc check, so the calls below cannot throw.
                         double eta;
                         if (se) {
                             const double num = (wh - wc) * ((wc + wh) * ch - 2.0 * wh * cc);
                             const double q_hot = wh / 2.0 * (ch - cc);
                             if (!(num > 0.0) || !(q_hot > 0.0)) {
                                 ++acc.rejected;
                                 continue;
                             }
                             eta = eta_se(FrequencyPair(wc, wh), bath);
                         } else {
                             const double num = (wc - wh) * ((wc + wh) * cc - 2.0 * wc * ch);
                             const double den =
                                 2.0 * wc * wh * ch - (wc * wc + wh * wh) * cc;
                             if (!(num > 0.0) || !(den > 0.0)) {
                                 ++acc.rejected;
                                 continue;
                             }
                             eta = eta_sc(FrequencyPair(wc, wh), bath);
                         }
                         ++acc.accepted;
                         if (eta > acc.max_eta) acc.max_eta = eta;
                         std::size_t bin = static_cast<std::size_t>(eta / plan.bin_width);
                         if (bin >= max_bins) bin = max_bins - 1;
                         ++acc.counts[bin];
                     }
                 });

    Histogram out{};
    std::vector<std::uint64_t> counts(max_bins, 0);
    double max_eta = -1.0;
    for (const Partial& p : partials) {
        out.accepted += p.accepted;
        out.rejected += p.rejected;
        if (p.max_eta > max_eta) max_eta = p.max_eta;
        for (std::size_t b = 0; b < max_bins; ++b) counts[b] += p.counts[b];
    }
    std::size_t last = 0;
    for (std::size_t b = 0; b < max_bins; ++b) {
        if (counts[b] > 0) last = b + 1;
    }
    out.bins.reserve(last);
    for (std::size_t b = 0; b < last; ++b) {
        out.bins.push_back(HistogramBin{static_cast<double>(b) * plan.bin_width,
                                        static_cast<double>(b + 1) * plan.bin_width, counts[b]});
    }
    out.bound = se ? eta_up_se(bath.tau()) : eta_up_sc(bath.tau());
    if (out.accepted > 0) {
        out.max_eta = max_eta;
        out.margin = out.bound - max_eta;
    }
    return out;
}

}  // namespace otto
