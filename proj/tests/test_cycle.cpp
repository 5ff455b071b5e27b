// Exact single-cycle thermodynamics: occupations, heats, work, efficiency.
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

#include "otto/cycle.hpp"
#include "otto/adiabaticity.hpp"
#include "otto/sampling.hpp"

using Catch::Approx;
using namespace otto;

TEST_CASE("coth evaluates stably across its whole domain") {
    // Small argument: coth(x) = 1/x + x/3 + O(x^3).
    CHECK(coth(1e-8) == Approx(1e8).epsilon(1e-12));
    CHECK(coth(0.01) == Approx(100.0 + 0.01 / 3.0).epsilon(1e-9));
    CHECK(coth(1.0) == Approx(std::cosh(1.0) / std::sinh(1.0)).epsilon(1e-15));
    // Large argument saturates to exactly 1 instead of overflowing.
    CHECK(coth(41.0) == 1.0);
    CHECK(coth(5e5) == 1.0);
    CHECK(coth(5e11) == 1.0);
    CHECK_THROWS_AS(coth(0.0), std::invalid_argument);
    CHECK_THROWS_AS(coth(-2.0), std::invalid_argument);
    CHECK_THROWS_AS(coth(std::nan("")), std::invalid_argument);
}

TEST_CASE("parameter bundles reject unphysical input") {
    CHECK_THROWS_AS(BathPair(-1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(BathPair(0.0, 0.0), std::invalid_argument);
    // Cold bath must really be colder (larger inverse temperature).
    CHECK_THROWS_AS(BathPair(0.5, 1.0), std::invalid_argument);
    CHECK_NOTHROW(BathPair(1.0, 1.0));

    CHECK_THROWS_AS(FrequencyPair(2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(FrequencyPair(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(FrequencyPair(1.0, std::nan("")), std::invalid_argument);
    CHECK_NOTHROW(FrequencyPair(1.5, 1.5));

    CHECK_THROWS_AS(AdiabaticityPair(0.99, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(AdiabaticityPair(1.0, 0.0), std::invalid_argument);
    CHECK_NOTHROW(AdiabaticityPair(1.0, 1.25));
}

TEST_CASE("stroke energies reach the zero-temperature and classical limits") {
    // Near T = 0 every equilibrium occupation collapses to the ground state.
    const StrokeEnergies cold(stroke_energies(FrequencyPair(1.0, 1.0),
                                              BathPair(1e6, 1e6),
                                              AdiabaticityPair(1.0, 1.0)));
    CHECK(cold.cold_eq == Approx(0.5).epsilon(1e-12));
    CHECK(cold.hot_eq == Approx(0.5).epsilon(1e-12));

    // Near T = infinity the equilibrium energy approaches the temperature.
    const StrokeEnergies hot(stroke_energies(FrequencyPair(1.0, 2.0),
                                             BathPair(0.01, 0.01),
                                             AdiabaticityPair(1.0, 1.0)));
    CHECK(hot.cold_eq == Approx(100.0).epsilon(1e-4));
}

TEST_CASE("post-compression energy is proportional to the drive factor") {
    const FrequencyPair freq(1.0, 2.0);
    const BathPair bath(1.0, 0.1);
    const StrokeEnergies quasi = stroke_energies(freq, bath, AdiabaticityPair(1.0, 1.0));
    const StrokeEnergies driven = stroke_energies(freq, bath, AdiabaticityPair(1.25, 1.0));
    CHECK(driven.post_compression == Approx(1.25 * quasi.post_compression).epsilon(1e-15));
    // The compression stroke scales the cold equilibrium energy up by omega_h/omega_c.
    CHECK(quasi.post_compression ==
          Approx(2.0 / 1.0 * quasi.cold_eq).epsilon(1e-15));
}

TEST_CASE("first law holds bitwise and degenerate cycles exchange nothing") {
    for (std::uint64_t i = 0; i < 500; ++i) {
        const double wc = 0.1 + 5.0 * detail::uniform01(11, 3 * i);
        const double wh = wc * (1.0 + 3.0 * detail::uniform01(11, 3 * i + 1));
        const double bh = 0.05 + detail::uniform01(11, 3 * i + 2);
        const FrequencyPair freq(wc, wh);
        const BathPair bath(bh * 2.0, bh);
        const CycleOutcome oc =
            heats_and_work(freq, bath, AdiabaticityPair(1.0, lambda_sudden(freq)));
        CHECK(oc.w_ext == oc.q_hot + oc.q_cold);  // literally the same sum
    }

    const CycleOutcome null_cycle = heats_and_work(
        FrequencyPair(1.7, 1.7), BathPair(2.0, 0.4), AdiabaticityPair(1.0, 1.0));
    CHECK(null_cycle.q_hot == -null_cycle.q_cold);
    CHECK(null_cycle.w_ext == 0.0);
    CHECK_FALSE(null_cycle.eta.has_value());
}

TEST_CASE("quasi-static efficiency equals one minus the frequency ratio") {
    const CycleOutcome oc = heats_and_work(FrequencyPair(1.0, 2.5), BathPair(2.0, 0.2),
                                           AdiabaticityPair(1.0, 1.0));
    REQUIRE(oc.eta.has_value());
    CHECK(*oc.eta == Approx(0.6).epsilon(1e-12));
    CHECK(efficiency(oc) == *oc.eta);

    // The identity holds over a parameter family whenever the cycle is an engine.
    for (std::uint64_t i = 0; i < 200; ++i) {
        const double z = 0.05 + 0.9 * detail::uniform01(13, 2 * i);
        const double bh = 0.01 + 0.2 * detail::uniform01(13, 2 * i + 1);
        const FrequencyPair freq(z, 1.0);
        const BathPair bath(bh / (0.9 * z), bh);  // tau < z so the cycle runs as an engine
        const CycleOutcome out = heats_and_work(freq, bath, AdiabaticityPair(1.0, 1.0));
        REQUIRE(out.eta.has_value());
        CHECK(*out.eta == Approx(1.0 - z).epsilon(1e-12));
    }
}

TEST_CASE("high-temperature adiabatic work matches the reduced expression") {
    // beta_h * W -> (1 - z)(1 - tau/z) for small beta*omega; z = 0.5, tau = 0.25.
    const double beta_h = 1e-3;
    const CycleOutcome oc = heats_and_work(FrequencyPair(1.0, 2.0),
                                           BathPair(4.0 * beta_h, beta_h),
                                           AdiabaticityPair(1.0, 1.0));
    CHECK(beta_h * oc.w_ext == Approx(0.25).epsilon(1e-3));
}

TEST_CASE("deep quantum regime with a sudden expansion only dissipates") {
    // For beta*omega >> 1 the work saturates at -(omega_h - omega_c)^2 / (4 omega_h).
    const FrequencyPair freq(1.0, 2.0);
    const BathPair bath(200.0, 100.0);
    const CycleOutcome oc =
        heats_and_work(freq, bath, AdiabaticityPair(1.0, lambda_sudden(freq)));
    CHECK(oc.w_ext == Approx(-0.125).epsilon(1e-6));
    CHECK(oc.w_ext < 0.0);
    CHECK_FALSE(oc.eta.has_value());
    CHECK_THROWS_AS(efficiency(oc), not_an_engine);
}

TEST_CASE("sudden-expansion cycle: frozen reference values") {
    const FrequencyPair freq(1.0, 2.0);
    const BathPair bath(1.0, 0.1);
    const CycleOutcome oc =
        heats_and_work(freq, bath, AdiabaticityPair(1.0, lambda_sudden(freq)));
    CHECK(oc.q_hot == Approx(7.8693577185153368).epsilon(1e-12));
    CHECK(oc.q_cold == Approx(-5.1888427507894171).epsilon(1e-12));
    CHECK(oc.w_ext == Approx(2.6805149677259197).epsilon(1e-12));
    REQUIRE(oc.eta.has_value());
    CHECK(*oc.eta == Approx(0.34062690547401319).epsilon(1e-12));
}

TEST_CASE("equal-temperature baths never yield an engine") {
    const CycleOutcome oc = heats_and_work(FrequencyPair(1.0, 2.0), BathPair(1.0, 1.0),
                                           AdiabaticityPair(1.0, 1.0));
    CHECK(oc.w_ext < 0.0);
    CHECK_FALSE(oc.eta.has_value());
    CHECK_THROWS_AS(efficiency(oc), not_an_engine);
}

TEST_CASE("heat rejected to the cold bath decreases with expansion drive") {
    const FrequencyPair freq(1.0, 2.0);
    const BathPair bath(1.0, 0.1);
    double previous = heats_and_work(freq, bath, AdiabaticityPair(1.0, 1.0)).q_cold;
    for (double lam : {1.05, 1.1, 1.2, 1.25}) {
        const double current = heats_and_work(freq, bath, AdiabaticityPair(1.0, lam)).q_cold;
        CHECK(current < previous);
        previous = current;
    }
}

TEST_CASE("extreme quantum parameters do not overflow") {
    // beta*omega of 1e6 and 1e12 exercise the saturated coth branch end to end.
    const CycleOutcome a = heats_and_work(FrequencyPair(1e6, 2e6), BathPair(2.0, 1.0),
                                          AdiabaticityPair(1.0, 1.0));
    CHECK(std::isfinite(a.w_ext));
    CHECK(a.w_ext == Approx(-(2e6 - 1e6) * 0.0).margin(1e-6));  // both occupations ground out
    const CycleOutcome b = heats_and_work(FrequencyPair(1e12, 2e12), BathPair(2.0, 1.0),
                                          AdiabaticityPair(1.0, 1.0));
    CHECK(std::isfinite(b.q_hot));
    CHECK(b.q_hot == Approx(0.5 * 2e12 * (1.0 - 1.0)).margin(1e-6));
}
