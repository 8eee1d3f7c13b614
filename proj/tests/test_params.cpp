#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "dressedpair/errors.hpp"
#include "dressedpair/params.hpp"

using namespace dressedpair;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
} // namespace

TEST_CASE("geometry factor f1: limits and exact trig points") {
    CHECK(geometry_factor_parallel(1e-8) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(geometry_factor_parallel(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    // f1(pi) = -3/(2 pi^2), frozen from a 50-digit evaluation
    CHECK(geometry_factor_parallel(kPi) ==
          doctest::Approx(-0.15198177546350665717).epsilon(1e-14));
    CHECK(std::abs(geometry_factor_parallel(1e3)) < 2e-3);
    CHECK_THROWS_AS(geometry_factor_parallel(std::nan("")), std::domain_error);
    CHECK_THROWS_AS(geometry_factor_parallel(kInf), std::domain_error);
    CHECK_THROWS_AS(geometry_factor_parallel(-1.0), std::domain_error);
}

TEST_CASE("geometry factor f3: limits and exact trig points") {
    CHECK(geometry_factor_axial(1e-9) == doctest::Approx(1.0).epsilon(1e-12));
    // f3(pi) = 3/pi^2 and f3(2 pi) = -3/(4 pi^2), frozen from 50-digit values
    CHECK(geometry_factor_axial(kPi) ==
          doctest::Approx(0.30396355092701331433).epsilon(1e-14));
    CHECK(geometry_factor_axial(2.0 * kPi) ==
          doctest::Approx(-0.075990887731753328583).epsilon(1e-13));
    CHECK_THROWS_AS(geometry_factor_axial(std::nan("")), std::domain_error);
}

TEST_CASE("series and closed form agree at the switchover") {
    // Series is used below 1e-2; just above, the closed form must continue it.
    for (double chi : {1.0000001e-2, 1.01e-2, 1.2e-2}) {
        const double closed = geometry_factor_parallel(chi);
        const double c2 = chi * chi;
        const double series = 1.0 - c2 / 5.0 + 3.0 * c2 * c2 / 280.0;
        CHECK(std::abs(closed / series - 1.0) < 1e-10);
        const double closed3 = geometry_factor_axial(chi);
        const double series3 = 1.0 - c2 / 10.0 + c2 * c2 / 280.0;
        CHECK(std::abs(closed3 / series3 - 1.0) < 1e-10);
    }
}

TEST_CASE("geometry factors stay within [-1, 1] across 1e5 sweep points") {
    const double lo = std::log(1e-6), hi = std::log(1e3);
    for (int i = 0; i < 100000; ++i) {
        const double chi = std::exp(lo + (hi - lo) * i / 99999.0);
        CHECK(std::abs(geometry_factor_parallel(chi)) <= 1.0 + 1e-15);
        CHECK(std::abs(geometry_factor_axial(chi)) <= 1.0 + 1e-15);
    }
}

TEST_CASE("coupling strength") {
    CHECK(coupling_g(2.0) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(coupling_g(10.0) == doctest::Approx(6e-3).epsilon(1e-15));
    CHECK_THROWS_AS(coupling_g(0.0), std::domain_error);
    CHECK_THROWS_AS(coupling_g(-1.0), std::domain_error);

    // chi = (6 gamma/Omega)^(1/3) puts g/Omega exactly at 1, outside the model.
    const double omega = 1e5;
    const double chi_boundary = std::cbrt(6.0 / omega);
    CHECK(coupling_g(chi_boundary) / omega == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(
        dressed_rates(SystemParams::from_occupations(omega, chi_boundary, 0, 0)),
        RegimeError);
}

TEST_CASE("thermal occupation") {
    CHECK(thermal_occupation(kInf) == 0.0);
    CHECK(thermal_occupation(std::log(2.0)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(thermal_occupation(1.0) ==
          doctest::Approx(0.58197670686932642439).epsilon(1e-14));
    CHECK_THROWS_AS(thermal_occupation(0.0), std::domain_error);
    CHECK_THROWS_AS(thermal_occupation(-1.0), std::domain_error);

    // detailed balance n/(n+1) = exp(-x)
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uni(1e-3, 20.0);
    for (int i = 0; i < 200; ++i) {
        const double x = uni(rng);
        const double n = thermal_occupation(x);
        CHECK(n / (n + 1.0) == doctest::Approx(std::exp(-x)).epsilon(1e-12));
    }
}

TEST_CASE("dressed rates: frequencies, golden values, asymptotics") {
    SystemParams p = SystemParams::from_occupations(1e5, 0.05, 0.0, 0.0);
    const RateSet r = dressed_rates(p);
    CHECK(r.omega1 + r.omega2 == 2.0 * 1e5);
    CHECK(r.omega2 - r.omega1 == doctest::Approx(2.0 * r.g).epsilon(1e-15));
    CHECK(r.omega3 == r.omega1 + r.omega2);

    // Frozen 50-digit reference for Omega/gamma = 1e5, chi = 0.05. The minus
    // rates inherit the cancellation floor of 1 - f1 near f1 ~ 1, hence the
    // looser tolerance on those two.
    CHECK(r.g == doctest::Approx(48000.0).epsilon(1e-15));
    CHECK(r.omega1 == doctest::Approx(52000.0).epsilon(1e-15));
    CHECK(r.omega2 == doctest::Approx(148000.0).epsilon(1e-15));
    CHECK(r.gamma1_plus == doctest::Approx(0.28119699048682938133).epsilon(1e-12));
    CHECK(r.gamma2_plus == doctest::Approx(6.4800346307990938036).epsilon(1e-12));
    CHECK(r.gamma1_minus ==
          doctest::Approx(1.9009513170618674167e-05).epsilon(1e-8));
    CHECK(r.gamma2_minus ==
          doctest::Approx(0.0035493692009061963584).epsilon(1e-8));

    // Large separation: every rate approaches gamma.
    const RateSet far = dressed_rates(SystemParams::from_occupations(1e5, 1e3, 0, 0));
    for (double rate : {far.gamma1_plus, far.gamma1_minus, far.gamma2_plus,
                        far.gamma2_minus}) {
        CHECK(std::abs(rate - 1.0) < 1.5e-3);
    }
}

TEST_CASE("small-chi window approximation of gamma2_minus") {
    const double omega = 1e5;
    const ValidityReport w = validity_window(omega);
    const double chi = w.chi_mid();
    const RateSet r = dressed_rates(SystemParams::from_occupations(omega, chi, 0, 0));
    const double approx = std::pow(1.0 + r.g / omega, 5) * chi * chi / 5.0;
    CHECK(std::abs(approx / r.gamma2_minus - 1.0) < 1e-2);
}

TEST_CASE("rate envelope for chi > 10") {
    const double omega = 1e5;
    for (int i = 0; i <= 60; ++i) {
        const double chi = std::pow(10.0, 1.05 + 2.0 * i / 60.0);
        const RateSet r = dressed_rates(SystemParams::from_occupations(omega, chi, 0, 0));
        const double bound = 3.0 / (2.0 * chi) + 18.0 / (chi * chi * chi);
        for (double rate : {r.gamma1_plus, r.gamma1_minus, r.gamma2_plus,
                            r.gamma2_minus}) {
            CHECK(std::abs(rate - 1.0) <= bound);
        }
    }
}

TEST_CASE("validity window: structure and brute-force oracle") {
    const ValidityReport w5 = validity_window(1e5);
    CHECK(w5.rwa_ok);
    CHECK(w5.chi_lo < w5.chi_hi);
    CHECK(w5.chi_lo > 1e-2);
    CHECK(w5.chi_hi < 1.0);
    CHECK(w5.g_over_omega < 1.0);

    const ValidityReport w8 = validity_window(1e8);
    CHECK(w8.rwa_ok);
    // wider on a log scale than the 1e5 window
    CHECK(std::log(w8.chi_hi / w8.chi_lo) > std::log(w5.chi_hi / w5.chi_lo));

    // Brute-force sweep oracle: the refined minimiser lies within one grid
    // cell of the argmin over 1e4 log-spaced points.
    const double lo = std::log(1.02 * std::cbrt(6.0 / 1e5)), hi = std::log(10.0);
    double best_chi = 0.0, best_val = kInf;
    double cell = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double chi = std::exp(lo + (hi - lo) * i / 9999.0);
        const RateSet r = dressed_rates(SystemParams::from_occupations(1e5, chi, 0, 0));
        if (r.gamma2_minus < best_val) {
            best_val = r.gamma2_minus;
            best_chi = chi;
            cell = chi * ((hi - lo) / 9999.0);
        }
    }
    CHECK(std::abs(w5.chi_lo - best_chi) <= cell);

    // Closed-form candidates are reported for comparison.
    CHECK(w5.chi_candidate_fifth_root ==
          doctest::Approx(std::pow(30.0 / 1e5, 0.2)).epsilon(1e-14));
    CHECK(w5.chi_candidate_cube_root ==
          doctest::Approx(std::cbrt(39.0 / 1e5)).epsilon(1e-14));

    const ValidityReport weak = validity_window(100.0);
    CHECK(!weak.warnings.empty()); // omega/gamma < 1e3 earns a warning

    // No timescale separation at all: report the failure instead of throwing.
    const ValidityReport none = validity_window(2.0);
    CHECK(!none.rwa_ok);
    CHECK(!none.warnings.empty());
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(SystemParams::from_occupations(0.0, 1.0, 0, 0), std::domain_error);
    CHECK_THROWS_AS(SystemParams::from_occupations(1e5, -1.0, 0, 0), std::domain_error);
    CHECK_THROWS_AS(SystemParams::from_occupations(1e5, 1.0, -0.1, 0), std::domain_error);

    // Temperature entry point rescales the ratio per dressed branch.
    const SystemParams p = SystemParams::from_temperature(1e4, 1.0, 2.0);
    const double g_over_omega = 6.0 / 1e4;
    CHECK(p.n1 == doctest::Approx(thermal_occupation(2.0 * (1.0 - g_over_omega)))
                      .epsilon(1e-14));
    CHECK(p.n2 == doctest::Approx(thermal_occupation(2.0 * (1.0 + g_over_omega)))
                      .epsilon(1e-14));
    CHECK(p.n1 > p.n2); // lower dressed frequency holds more photons

    const SystemParams zero_t = SystemParams::from_temperature(1e4, 1.0, kInf);
    CHECK(zero_t.n1 == 0.0);
    CHECK(zero_t.n2 == 0.0);
}
