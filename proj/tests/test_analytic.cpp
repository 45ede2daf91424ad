#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "adelab/analytic.hpp"
#include "adelab/error.hpp"
#include "oracles.hpp"

using namespace adelab;

namespace {

constexpr double kPi = std::numbers::pi;

ValidatedScenario scenario_with(double d, double u, InitialCondition ic, double length = 1.0) {
    ScenarioSpec spec = benchmark_scenario();
    spec.diffusivity = UniformDiffusivity{d};
    spec.velocity = u;
    spec.length = length;
    spec.initial_condition = std::move(ic);
    return validate_scenario(spec);
}

}  // namespace

TEST_CASE("transform_factor") {
    CHECK(transform_factor(0.0, 0.0, 3.6e-4, 3.6e-3) == 1.0);
    CHECK(transform_factor(0.0, 0.0, -2.0, 0.7) == 1.0);
    CHECK(transform_factor(0.37, 4.2, 0.0, 3.6e-3) == 1.0);
    // exp(0.05 * 0.6 - 9e-6 * 0.6), 30-digit reference
    CHECK(transform_factor(0.6, 0.6, 3.6e-4, 3.6e-3) == doctest::Approx(1.0304489695140575).epsilon(1e-13));
    CHECK(transform_factor(0.6, 0.6, 3.6e-4, 3.6e-3, 2.5) ==
          doctest::Approx(2.5 * 1.0304489695140575).epsilon(1e-13));

    try {
        transform_factor(1.0, 0.0, 2.0, 1e-3);
        FAIL("expected overflow");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ExponentOverflow);
    }
}

TEST_CASE("mode_decay_rate") {
    const DecayRate bench = mode_decay_rate(1, 3.6e-3, 3.6e-4, 1.0);
    CHECK(std::abs(bench.rate - 0.03554) <= 1e-5);

    // u^2/(4D) + pi^2 D, 30-digit reference
    CHECK(mode_decay_rate(1, 7.92e-2, 3.6e-4, 1.0).rate == doctest::Approx(0.781673077657186).epsilon(1e-13));
    CHECK(std::abs(mode_decay_rate(1, 7.92e-2, 3.6e-4, 1.0, kPaperPi).rate - 0.78088) <= 1e-5);

    const DecayRate pure = mode_decay_rate(1, 3.6e-3, 0.0, 1.0);
    CHECK(pure.advective == 0.0);
    CHECK(pure.rate == 3.6e-3 * kPi * kPi);
}

TEST_CASE("property: decay rate decomposes into nonnegative parts") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> d(1e-4, 1.0);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int> n(1, 50);
    for (int trial = 0; trial < 1000; ++trial) {
        const double vel = trial % 10 == 0 ? 0.0 : u(rng);
        const DecayRate r = mode_decay_rate(n(rng), d(rng), vel, 2.0);
        CHECK(r.advective >= 0.0);
        CHECK(r.diffusive > 0.0);
        CHECK(r.rate == r.advective + r.diffusive);
        CHECK((r.advective == 0.0) == (vel == 0.0));
    }
}

TEST_CASE("fourier_coefficients recover single modes when u = 0") {
    const auto b1 = fourier_coefficients(SineMode{1}, 0.0, 3.6e-3, 1.0, 4);
    const auto b2 = fourier_coefficients(SineMode{2}, 0.0, 3.6e-3, 1.0, 4);
    for (int n = 0; n < 4; ++n) {
        CHECK(std::abs(b1[n] - (n == 0 ? 1.0 : 0.0)) <= 1e-10);
        CHECK(std::abs(b2[n] - (n == 1 ? 1.0 : 0.0)) <= 1e-10);
    }
}

TEST_CASE("property: quadrature orthogonality for random modes and lengths") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> mode(1, 16);
    std::uniform_real_distribution<double> length(0.1, 20.0);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = mode(rng);
        const double len = length(rng);
        const auto b = fourier_coefficients(SineMode{n}, 0.0, 0.05, len, 16);
        for (int k = 1; k <= 16; ++k) CHECK(std::abs(b[k - 1] - (k == n ? 1.0 : 0.0)) <= 1e-10);
    }
}

TEST_CASE("fourier_coefficients with advection match two independent oracles") {
    const double c = 3.6e-4 / (2.0 * 3.6e-3);
    const auto b = fourier_coefficients(SineMode{1}, 3.6e-4, 3.6e-3, 1.0, 8);
    for (int n = 1; n <= 8; ++n) {
        const double closed = oracle::sine_mode_coefficient(c, 1, n, 1.0);
        const double trap = 2.0 * oracle::trapezoid(
                                      [&](double x) { return std::exp(-c * x) * std::sin(kPi * x) * std::sin(n * kPi * x); },
                                      0.0, 1.0, 1'000'000);
        CHECK(std::abs(closed - trap) <= 1e-9);
        CHECK(std::abs(b[n - 1] - closed) <= 1e-9);
    }
    // 2 int_0^1 e^{-0.05 x} sin^2(pi x) dx, 30-digit reference
    CHECK(b[0] == doctest::Approx(0.975349745241562).epsilon(1e-12));
}

TEST_CASE("fourier_coefficients for a tent matches the closed form") {
    // f = 1 - |2x - 1| has b_n = 8 sin(n pi / 2) / (n pi)^2.
    const auto b = fourier_coefficients_refined(Samples{{0.0, 0.5, 1.0}, {0.0, 1.0, 0.0}}, 0.0, 1e-2, 1.0, 16);
    for (int n = 1; n <= 16; ++n) {
        CHECK(std::abs(b[n - 1] - 8.0 * std::sin(n * kPi / 2) / (n * kPi * n * kPi)) <= 1e-10);
    }
}

TEST_CASE("fourier_coefficients reports unconverged quadrature and bad arguments") {
    try {
        fourier_coefficients(SineMode{1}, 0.5, 1e-2, 1.0, 8, 8);
        FAIL("expected QuadratureNotConverged");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::QuadratureNotConverged);
    }
    CHECK_THROWS_AS(fourier_coefficients(SineMode{1}, 0.0, 1e-2, 1.0, 8, 7), Error);
    CHECK_THROWS_AS(fourier_coefficients(SineMode{1}, 0.0, 1e-2, 1.0, 0), Error);
}

TEST_CASE("series_evaluate") {
    const ValidatedScenario pure = scenario_with(3.6e-3, 0.0, SineMode{1});
    const SeriesSolution s = SeriesSolution::from_scenario(pure);
    // exp(-pi^2 * 3.6e-3), 30-digit reference
    CHECK(std::abs(series_evaluate(s, 0.5, 1.0).concentration - 0.965093225239047) <= 1e-6);
    CHECK(series_evaluate(s, 0.0, 0.3).concentration == 0.0);
    CHECK(series_evaluate(s, 1.0, 0.3).concentration == 0.0);

    const SeriesSolution adv = SeriesSolution::from_scenario(validate_scenario(benchmark_scenario()), 32);
    CHECK(std::abs(adv(0.6, 0.6) - 0.93099) <= 1e-3);

    const auto v = adv.evaluate(0.3, 0.5);
    const double kk = 32 * kPi;
    CHECK(v.tail_estimate == doctest::Approx(std::abs(adv.coefficients().back()) * std::exp(-3.6e-3 * kk * kk * 0.5)));
    CHECK_THROWS_AS(adv.evaluate(1.5, 0.1), Error);
}

TEST_CASE("property: series vanishes on the boundary for any coefficients") {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> coef(0.0, 10.0);
    std::uniform_real_distribution<double> pos(0.1, 5.0);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<double> b(static_cast<std::size_t>(1 + trial % 40));
        for (double& x : b) x = coef(rng);
        const double len = pos(rng);
        const SeriesSolution s(b, pos(rng) * 1e-2, pos(rng) * 1e-2, len);
        const double t = pos(rng) - 0.1;
        CHECK(s(0.0, t) == 0.0);
        CHECK(s(len, t) == 0.0);
    }
}

TEST_CASE("closed_form_reference") {
    const ValidatedScenario bench = validate_scenario(benchmark_scenario());
    CHECK(std::abs(closed_form_reference(0.6, 0.6, bench) - 0.93099) <= 2e-5);
    CHECK(closed_form_reference(0.3, 0.0, bench) == std::sin(kPi * 0.3));
    CHECK(closed_form_reference(0.0, 0.7, bench) == 0.0);

    const ValidatedScenario tent = scenario_with(3.6e-3, 0.0, Samples{{0.0, 0.5, 1.0}, {0.0, 1.0, 0.0}});
    try {
        closed_form_reference(0.5, 0.1, tent);
        FAIL("expected NotSineMode");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotSineMode);
    }
}

TEST_CASE("closed form leaves a residual of size u pi in the PDE") {
    // Residual r = C_t - D C_xx + u C_x of C = exp(-k t) sin(pi x), with
    // analytic derivatives: r = exp(-k t) (-a sin(pi x) + u pi cos(pi x)), a = u^2/(4D).
    // Its supremum over (0,1) x (0,1] is hypot(a, u pi), just above u pi.
    for (double u : {0.0, 3.6e-4, 3.6e-2}) {
        const double d = 3.6e-3;
        const ValidatedScenario s = scenario_with(d, u, SineMode{1});
        const double k = mode_decay_rate(1, d, u, 1.0).rate;
        double sup = 0.0;
        for (int i = 1; i < 400; ++i) {
            for (int j = 1; j <= 100; ++j) {
                const double x = i / 400.0;
                const double t = j / 100.0;
                const double c = closed_form_reference(x, t, s);
                // C_t = -k C, D C_xx = -(D pi^2) C
                const double cx = kPi * std::exp(-k * t) * std::cos(kPi * x);
                sup = std::max(sup, std::abs((-k + d * kPi * kPi) * c + u * cx));
            }
        }
        if (u == 0.0) {
            CHECK(sup == 0.0);
        } else {
            const double a = u * u / (4.0 * d);
            CHECK(sup <= std::hypot(a, u * kPi) * (1.0 + 1e-12));
            CHECK(sup >= 0.95 * u * kPi);
        }
    }
}
