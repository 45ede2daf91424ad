#include <doctest.h>

#include <functional>
#include <cmath>
#include <random>

#include "adelab/error.hpp"
#include "adelab/model.hpp"

using namespace adelab;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected adelab::Error");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("benchmark scenario validates") {
    const ValidatedScenario s = validate_scenario(benchmark_scenario());
    CHECK(s.uniform_diffusivity() == 3.6e-3);
    CHECK(s.velocity() == 3.6e-4);
    CHECK(s.length() == 1.0);
    CHECK(s.initial_condition().is_sine_mode());
}

TEST_CASE("validation rejects broken scenarios") {
    ScenarioSpec spec = benchmark_scenario();

    spec.diffusivity = UniformDiffusivity{0.0};
    CHECK(code_of([&] { validate_scenario(spec); }) == ErrorCode::NonPositiveDiffusivity);

    spec.diffusivity = SplitDiffusivity{1e-2, -1e-3};
    CHECK(code_of([&] { validate_scenario(spec); }) == ErrorCode::NonPositiveDiffusivity);

    spec = benchmark_scenario();
    spec.velocity = 2.0;
    spec.diffusivity = UniformDiffusivity{1e-3};  // u L / 2D = 1000
    CHECK(code_of([&] { validate_scenario(spec); }) == ErrorCode::ExponentOverflow);

    spec = benchmark_scenario();
    spec.initial_condition = Samples{{0.0, 0.5, 1.0}, {0.0, 1.0, 0.3}};
    CHECK(code_of([&] { validate_scenario(spec); }) == ErrorCode::IncompatibleIC);

    spec = benchmark_scenario();
    spec.initial_condition = Samples{{0.0, 0.5}, {0.0, 1.0}};
    CHECK(code_of([&] { validate_scenario(spec); }) == ErrorCode::InvalidScenario);

    spec = benchmark_scenario();
    spec.initial_condition = SineMode{0};
    CHECK(code_of([&] { validate_scenario(spec); }) == ErrorCode::InvalidScenario);

    spec = benchmark_scenario();
    spec.length = 0.0;
    CHECK(code_of([&] { validate_scenario(spec); }) == ErrorCode::InvalidScenario);

    spec = benchmark_scenario();
    spec.bc_right = 1.0;
    CHECK(code_of([&] { validate_scenario(spec); }) == ErrorCode::InvalidScenario);

    spec = benchmark_scenario();
    spec.initial_condition = Samples{{0.0, 0.5, 0.5, 1.0}, {0.0, 1.0, 0.9, 0.0}};
    CHECK(code_of([&] { validate_scenario(spec); }) == ErrorCode::InvalidScenario);
}

TEST_CASE("samples are sorted, deduplicated and interpolated linearly") {
    ScenarioSpec spec = benchmark_scenario();
    spec.initial_condition = Samples{{1.0, 0.25, 0.0, 0.25, 0.5}, {0.0, 0.5, 0.0, 0.5, 1.0}};
    const ValidatedScenario s = validate_scenario(spec);
    const Samples* samples = s.initial_condition().samples();
    REQUIRE(samples != nullptr);
    CHECK(samples->xs == std::vector<double>{0.0, 0.25, 0.5, 1.0});
    CHECK(samples->fs == std::vector<double>{0.0, 0.5, 1.0, 0.0});
    CHECK(s.initial_value(0.375) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(s.initial_value(0.75) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s.initial_condition().breakpoints(1.0) == std::vector<double>{0.0, 0.25, 0.5, 1.0});
}

TEST_CASE("validation is idempotent") {
    ScenarioSpec spec = benchmark_scenario();
    spec.initial_condition = Samples{{0.5, 0.0, 1.0}, {0.2, 0.0, 0.0}};
    const ValidatedScenario once = validate_scenario(spec);
    const ValidatedScenario twice = validate_scenario(once.spec());
    CHECK(once == twice);
}

TEST_CASE("build_grid") {
    const UniformGrid g = build_grid(1.0, 1.0, 5, 5);
    CHECK(g.dx == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(g.dt == doctest::Approx(0.2).epsilon(1e-15));

    const UniformGrid h = build_grid(2.0, 1.0, 4, 2);
    CHECK(h.dx == 0.5);
    CHECK(h.dt == 0.5);

    CHECK(code_of([] { build_grid(1.0, 1.0, 1, 5); }) == ErrorCode::DegenerateGrid);
    CHECK(code_of([] { build_grid(1.0, 1.0, 5, 0); }) == ErrorCode::DegenerateGrid);
}

TEST_CASE("property: grid end nodes reproduce L and T, IC vanishes at both ends") {
    std::mt19937_64 rng(20260611);
    std::uniform_real_distribution<double> len(0.01, 50.0);
    std::uniform_int_distribution<int> count(2, 5000);
    std::uniform_int_distribution<int> mode(1, 40);
    for (int trial = 0; trial < 1000; ++trial) {
        ScenarioSpec spec = benchmark_scenario();
        spec.length = len(rng);
        spec.horizon = len(rng);
        spec.initial_condition = SineMode{mode(rng)};
        const ValidatedScenario s = validate_scenario(spec);
        const UniformGrid g = build_grid(s.length(), s.horizon(), count(rng), count(rng));
        CHECK(std::abs(g.x(g.M) - s.length()) <= 1e-12 * std::max(1.0, s.length()));
        CHECK(std::abs(g.t(g.N) - s.horizon()) <= 1e-12 * std::max(1.0, s.horizon()));
        CHECK(std::abs(s.initial_value(g.x(0))) <= 1e-12);
        CHECK(std::abs(s.initial_value(g.x(g.M))) <= 1e-12);
    }
}

TEST_CASE("scenario JSON parsing") {
    const ScenarioSpec uniform = parse_scenario_json(
        R"({"D": 3.6e-3, "u": 3.6e-4, "L": 1, "T": 1, "ic": {"sine_mode": 1}})");
    CHECK(uniform == benchmark_scenario());

    const ScenarioSpec split = parse_scenario_json(
        R"({"D1": 7.92e-2, "D2": 4.68e-2, "u": 3.6e-4, "L": 1, "T": 2, "ic": {"samples": [[0,0],[0.5,1],[1,0]]}})");
    const auto* d = std::get_if<SplitDiffusivity>(&split.diffusivity);
    REQUIRE(d != nullptr);
    CHECK(d->left == 7.92e-2);
    CHECK(d->right == 4.68e-2);
    CHECK(split.initial_condition.samples()->xs.size() == 3);

    CHECK(code_of([] {
              parse_scenario_json(R"({"D": 1, "u": 0, "L": 1, "T": 1, "ic": {"sine_mode": 1}, "extra": 2})");
          }) == ErrorCode::ConfigError);
    CHECK(code_of([] { parse_scenario_json(R"({"D": 1, "D1": 1, "D2": 1, "u": 0, "L": 1, "T": 1, "ic": {"sine_mode": 1}})"); }) ==
          ErrorCode::ConfigError);
    CHECK(code_of([] { parse_scenario_json(R"({"D1": 1, "u": 0, "L": 1, "T": 1, "ic": {"sine_mode": 1}})"); }) ==
          ErrorCode::ConfigError);
    CHECK(code_of([] { parse_scenario_json(R"({"D": 1, "u": 0, "L": 1, "T": 1, "ic": {"cosine": 1}})"); }) ==
          ErrorCode::ConfigError);
    CHECK(code_of([] { parse_scenario_json("{not json"); }) == ErrorCode::ConfigError);
}

TEST_CASE("solution surface indexing") {
    const UniformGrid g = build_grid(1.0, 1.0, 2, 1);
    const SolutionSurface s(g, {0, 1, 0, 0, 2, 0});
    CHECK(s.levels() == 2);
    CHECK(s.at(1, 1) == 2.0);
    CHECK(s.level(0)[1] == 1.0);
    CHECK(code_of([&] { (void)s.at(3, 0); }) == ErrorCode::LengthMismatch);
    CHECK(code_of([&] { SolutionSurface(g, {0, 1}); }) == ErrorCode::LengthMismatch);
}
