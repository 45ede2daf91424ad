// Problem definition for the 1-D advection-diffusion equation
//   C_t = D C_xx - u C_x  on 0 < x < L,  C(0,t) = C(L,t) = 0,  C(x,0) = f(x).
// Units: metres and hours throughout.
#pragma once

#include <cstddef>
#include <istream>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace adelab {

/// Largest |u x / (2D)| accepted before exp() of the transformation factor
/// is considered unrepresentable.
inline constexpr double kMaxTransformExponent = 700.0;

/// f(x) = sin(n pi x / L)
struct SineMode {
    int n = 1;
    bool operator==(const SineMode&) const = default;
};

/// Tabulated f, linearly interpolated between (xs[i], fs[i]).
struct Samples {
    std::vector<double> xs;
    std::vector<double> fs;
    bool operator==(const Samples&) const = default;
};

class InitialCondition {
public:
    InitialCondition() = default;
    InitialCondition(SineMode mode) : shape_(mode) {}
    InitialCondition(Samples samples) : shape_(std::move(samples)) {}

    bool is_sine_mode() const { return std::holds_alternative<SineMode>(shape_); }
    const SineMode* sine_mode() const { return std::get_if<SineMode>(&shape_); }
    const Samples* samples() const { return std::get_if<Samples>(&shape_); }

    /// f(x) on a domain of length L. Samples are clamped outside their range.
    double operator()(double x, double length) const;

    /// Breakpoints where f may have a kink (always includes 0 and L).
    std::vector<double> breakpoints(double length) const;

    bool operator==(const InitialCondition&) const = default;

private:
    std::variant<SineMode, Samples> shape_{SineMode{}};
};

struct UniformDiffusivity {
    double value = 0.0;
    bool operator==(const UniformDiffusivity&) const = default;
};

/// D = left on [0, L/2), right on (L/2, L].
struct SplitDiffusivity {
    double left = 0.0;
    double right = 0.0;
    bool operator==(const SplitDiffusivity&) const = default;
};

using Diffusivity = std::variant<UniformDiffusivity, SplitDiffusivity>;

struct ScenarioSpec {
    Diffusivity diffusivity{UniformDiffusivity{}};  // m^2/hr
    double velocity = 0.0;                          // m/hr
    double length = 1.0;                            // m
    double horizon = 1.0;                           // hr
    InitialCondition initial_condition{};
    double bc_left = 0.0;
    double bc_right = 0.0;

    bool operator==(const ScenarioSpec&) const = default;
};

/// A ScenarioSpec that has passed validate_scenario(). Immutable.
class ValidatedScenario {
public:
    const ScenarioSpec& spec() const { return spec_; }

    double velocity() const { return spec_.velocity; }
    double length() const { return spec_.length; }
    double horizon() const { return spec_.horizon; }
    const InitialCondition& initial_condition() const { return spec_.initial_condition; }

    bool is_split() const { return std::holds_alternative<SplitDiffusivity>(spec_.diffusivity); }
    /// Throws InvalidScenario for split scenarios.
    double uniform_diffusivity() const;
    /// Throws InvalidScenario for uniform scenarios.
    SplitDiffusivity split_diffusivity() const;
    double max_diffusivity() const;
    double min_diffusivity() const;

    /// f(x) evaluated on this scenario's domain.
    double initial_value(double x) const { return spec_.initial_condition(x, spec_.length); }

    bool operator==(const ValidatedScenario&) const = default;

private:
    friend ValidatedScenario validate_scenario(const ScenarioSpec& raw);
    explicit ValidatedScenario(ScenarioSpec spec) : spec_(std::move(spec)) {}

    ScenarioSpec spec_;
};

/// Checks every ScenarioSpec invariant. Samples are sorted and duplicate
/// abscissae collapsed.
ValidatedScenario validate_scenario(const ScenarioSpec& raw);

/// The worked benchmark: D = 3.6e-3, u = 3.6e-4, L = T = 1, f = sin(pi x).
ScenarioSpec benchmark_scenario();

struct UniformGrid {
    double length = 0.0;
    double horizon = 0.0;
    int M = 0;  // x_m = m dx, m = 0..M
    int N = 0;  // t_n = n dt, n = 0..N
    double dx = 0.0;
    double dt = 0.0;

    double x(int m) const { return m * dx; }
    double t(int n) const { return n * dt; }
    std::size_t nodes_per_level() const { return static_cast<std::size_t>(M) + 1; }

    bool operator==(const UniformGrid&) const = default;
};

UniformGrid build_grid(double length, double horizon, int M, int N);

/// Concentration values V[m][n] stored level by level (time-outer).
/// Holds time levels 0..levels()-1, which may stop short of grid.N.
class SolutionSurface {
public:
    SolutionSurface(UniformGrid grid, std::vector<double> values);

    const UniformGrid& grid() const { return grid_; }
    int levels() const { return static_cast<int>(values_.size() / grid_.nodes_per_level()); }
    double at(int m, int n) const { return values_[index(m, n)]; }
    std::span<const double> level(int n) const;
    std::span<const double> values() const { return values_; }

    bool operator==(const SolutionSurface&) const = default;

private:
    std::size_t index(int m, int n) const;

    UniformGrid grid_;
    std::vector<double> values_;
};

/// Parses the scenario JSON object
///   {"D" | "D1"+"D2", "u", "L", "T", "ic": {"sine_mode": n} | {"samples": [[x, f], ...]}}
/// Unknown keys are rejected with ConfigError. The result is not yet validated.
ScenarioSpec parse_scenario_json(std::istream& in);
ScenarioSpec parse_scenario_json(const std::string& text);
ScenarioSpec load_scenario_file(const std::string& path);

}  // namespace adelab
