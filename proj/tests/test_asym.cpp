// Closed-form work, efficiency and engine predicates for the two
// asymmetrically driven cycle orders (one sudden stroke, one quasi-static).
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

#include "otto/asym.hpp"
#include "otto/adiabaticity.hpp"
#include "otto/high_temp.hpp"
#include "otto/sampling.hpp"

using Catch::Approx;
using namespace otto;

namespace {

// Random parameter draw shared by the consistency properties below.
struct Draw {
    FrequencyPair freq;
    BathPair bath;
};

Draw make_draw(std::uint64_t seed, std::uint64_t i) {
    const double wa = 100.0 * (1.0 - detail::uniform01(seed, 4 * i));
    const double wb = 100.0 * (1.0 - detail::uniform01(seed, 4 * i + 1));
    const double bc = 0.05 + 2.0 * detail::uniform01(seed, 4 * i + 2);
    const double ratio = 0.01 + 0.98 * detail::uniform01(seed, 4 * i + 3);
    return Draw{FrequencyPair(std::min(wa, wb), std::max(wa, wb)),
                BathPair(bc, bc * ratio)};
}

}  // namespace

TEST_CASE("equal frequencies produce no work in either drive order") {
    const FrequencyPair freq(1.5, 1.5);
    const BathPair bath(1.0, 0.25);
    CHECK(work_se(freq, bath) == 0.0);
    CHECK(work_sc(freq, bath) == 0.0);
}

TEST_CASE("deep quantum limit: both drive orders dissipate the same closed forms") {
    const FrequencyPair freq(1.0, 2.0);
    const BathPair bath(150.0, 60.0);
    // W -> -(omega_h - omega_c)^2 / (4 omega_h) with the sudden expansion stroke,
    // and -(omega_h - omega_c)^2 / (4 omega_c) with the sudden compression stroke.
    CHECK(work_se(freq, bath) == Approx(-0.125).epsilon(1e-6));
    CHECK(work_sc(freq, bath) == Approx(-0.25).epsilon(1e-6));
    CHECK_FALSE(pwc_se(freq, bath));
    CHECK_FALSE(pwc_sc(freq, bath));
}

TEST_CASE("low-temperature regime never runs as an engine (mini battery)") {
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const double wa = 100.0 * (1.0 - detail::uniform01(21, 4 * i));
        const double wb = 100.0 * (1.0 - detail::uniform01(21, 4 * i + 1));
        if (wa == wb) continue;
        const double wc = std::min(wa, wb), wh = std::max(wa, wb);
        const double bh = 50.0 / wh * (1.0 + 3.0 * detail::uniform01(21, 4 * i + 2));
        const double bc = std::max(50.0 / wc, bh) * (1.0 + 3.0 * detail::uniform01(21, 4 * i + 3));
        const FrequencyPair freq(wc, wh);
        const BathPair bath(bc, bh);
        CHECK(work_se(freq, bath) < 0.0);
        CHECK(work_sc(freq, bath) < 0.0);
    }
}

TEST_CASE("high-temperature limit reduces to the dimensionless expressions") {
    const double beta_h = 1e-3;
    const double tau = 0.36;
    const double z = 0.6;
    const FrequencyPair freq(z, 1.0);
    const BathPair bath(beta_h / tau, beta_h);
    // Both reduced works equal (1 - sqrt(tau))^2 / 2 = 0.08 at z = sqrt(tau).
    CHECK(beta_h * work_se(freq, bath) == Approx(0.08).epsilon(1e-3));
    CHECK(beta_h * work_sc(freq, bath) == Approx(0.08).epsilon(1e-3));

    // Efficiency at tau = 0.36, z = 0.8 approaches the reduced ratio 0.55 -> eta.
    const FrequencyPair f2(0.8, 1.0);
    const auto ht = ht_quantities(Scheme::sudden_expansion, ReducedParams(0.8, tau));
    REQUIRE(ht.eta.has_value());
    CHECK(eta_se(f2, bath) == Approx(*ht.eta).epsilon(1e-3));
}

TEST_CASE("closed forms agree with the exact cycle evaluated stroke by stroke") {
    std::uint64_t eta_compared = 0;
    for (std::uint64_t i = 0; i < 2000; ++i) {
        const Draw d = make_draw(23, i);
        if (d.freq.omega_c == d.freq.omega_h) continue;
        // Both routes cancel large coth terms; compare on that scale.
        const detail::CothPair cp = detail::coth_pair(d.freq, d.bath);
        const double scale = d.freq.omega_h * (cp.cold + cp.hot);
        const double sudden = lambda_sudden(d.freq);
        const CycleOutcome se =
            heats_and_work(d.freq, d.bath, AdiabaticityPair(1.0, sudden));
        const CycleOutcome sc =
            heats_and_work(d.freq, d.bath, AdiabaticityPair(sudden, 1.0));
        CHECK(std::abs(work_se(d.freq, d.bath) - se.w_ext) <= 1e-12 * scale);
        CHECK(std::abs(work_sc(d.freq, d.bath) - sc.w_ext) <= 1e-12 * scale);
        if (se.eta && se.w_ext > 1e-4 * scale) {
            CHECK(eta_se(d.freq, d.bath) == Approx(*se.eta).epsilon(1e-10));
            ++eta_compared;
        }
        if (sc.eta && sc.w_ext > 1e-4 * scale) {
            CHECK(eta_sc(d.freq, d.bath) == Approx(*sc.eta).epsilon(1e-10));
            ++eta_compared;
        }
    }
    CHECK(eta_compared > 50);
}

TEST_CASE("engine predicates agree with the sign of the work") {
    std::uint64_t compared = 0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        const Draw d = make_draw(29, i);
        const double wse = work_se(d.freq, d.bath);
        if (std::abs(wse) > 1e-12) {
            CHECK(pwc_se(d.freq, d.bath) == (wse > 0.0));
            ++compared;
        }
        const double wsc = work_sc(d.freq, d.bath);
        if (std::abs(wsc) > 1e-12) {
            CHECK(pwc_sc(d.freq, d.bath) == (wsc > 0.0));
            ++compared;
        }
    }
    CHECK(compared > 15000);
}

TEST_CASE("the frequency-degenerate boundary stays inside both predicates") {
    const FrequencyPair freq(2.0, 2.0);
    const BathPair bath(1.0, 0.2);
    CHECK(pwc_se(freq, bath));
    CHECK(pwc_sc(freq, bath));
}

TEST_CASE("sampled efficiencies respect the universal and high-temperature caps") {
    const BathPair bath(1.0, 0.1);
    std::uint64_t engines = 0;
    for (std::uint64_t i = 0; i < 20000; ++i) {
        const double wa = 100.0 * (1.0 - detail::uniform01(31, 2 * i));
        const double wb = 100.0 * (1.0 - detail::uniform01(31, 2 * i + 1));
        if (wa == wb) continue;
        const FrequencyPair freq(std::min(wa, wb), std::max(wa, wb));
        if (pwc_se(freq, bath)) {
            const double eta = eta_se(freq, bath);
            CHECK(eta <= 0.36);
            CHECK(eta < 0.5);
            ++engines;
        }
        if (pwc_sc(freq, bath)) {
            const double eta = eta_sc(freq, bath);
            CHECK(eta <= 0.53918472426628788);
            ++engines;
        }
    }
    CHECK(engines > 1000);
}

TEST_CASE("efficiency accessors refuse non-engine parameters") {
    // Equal bath temperatures: no net work can be extracted.
    const FrequencyPair freq(1.0, 2.0);
    const BathPair bath(1.0, 1.0);
    CHECK_FALSE(pwc_se(freq, bath));
    CHECK_THROWS_AS(eta_se(freq, bath), not_an_engine);
    CHECK_FALSE(pwc_sc(freq, bath));
    CHECK_THROWS_AS(eta_sc(freq, bath), not_an_engine);
}
