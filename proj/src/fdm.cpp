#include "adelab/fdm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "adelab/error.hpp"

namespace adelab {

namespace {

void require_matching_grid(const ValidatedScenario& scenario, const UniformGrid& grid) {
    const auto close = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); };
    if (!close(grid.length, scenario.length()) || !close(grid.horizon, scenario.horizon())) {
        throw Error(ErrorCode::GridMismatch, "grid L and T must equal the scenario's L and T");
    }
}

double advection_term(std::span<const double> v, std::size_t m, double beta, AdvectionStencil stencil) {
    switch (stencil) {
        case AdvectionStencil::ForwardAsInPaper:
            return -beta * (v[m + 1] - v[m]);
        case AdvectionStencil::Central:
            return -0.5 * beta * (v[m + 1] - v[m - 1]);
        case AdvectionStencil::Upwind:
            return beta >= 0.0 ? -beta * (v[m] - v[m - 1]) : -beta * (v[m + 1] - v[m]);
    }
    return 0.0;
}

void step_into(std::span<const double> row, std::span<const double> alphas, double beta,
               AdvectionStencil stencil, std::span<double> out) {
    const std::size_t last = row.size() - 1;
    out[0] = 0.0;
    out[last] = 0.0;
    for (std::size_t m = 1; m < last; ++m) {
        out[m] = row[m] + alphas[m] * (row[m + 1] - 2.0 * row[m] + row[m - 1]) +
                 advection_term(row, m, beta, stencil);
    }
}

SolutionSurface march(const ValidatedScenario& scenario, const UniformGrid& grid,
                      std::span<const double> alphas, double beta, const SolveOptions& options) {
    const int steps = options.steps.value_or(grid.N);
    if (steps < 0 || steps > grid.N) {
        throw Error(ErrorCode::InvalidArgument, "step count must lie in [0, N]");
    }
    const std::size_t width = grid.nodes_per_level();
    std::vector<double> values(width * (static_cast<std::size_t>(steps) + 1), 0.0);

    for (int m = 1; m < grid.M; ++m) values[static_cast<std::size_t>(m)] = scenario.initial_value(grid.x(m));

    std::span<double> all(values);
    for (int n = 0; n < steps; ++n) {
        const auto offset = static_cast<std::size_t>(n) * width;
        step_into(all.subspan(offset, width), alphas, beta, options.stencil, all.subspan(offset + width, width));
    }
    return SolutionSurface(grid, std::move(values));
}

}  // namespace

std::string_view to_string(AdvectionStencil stencil) {
    switch (stencil) {
        case AdvectionStencil::ForwardAsInPaper: return "forward";
        case AdvectionStencil::Central: return "central";
        case AdvectionStencil::Upwind: return "upwind";
    }
    return "unknown";
}

std::optional<AdvectionStencil> parse_stencil(std::string_view name) {
    if (name == "forward") return AdvectionStencil::ForwardAsInPaper;
    if (name == "central") return AdvectionStencil::Central;
    if (name == "upwind") return AdvectionStencil::Upwind;
    return std::nullopt;
}

FtcsCoefficients ftcs_coefficients(double diffusivity, double velocity, double dx, double dt) {
    if (!(dx > 0.0) || !(dt > 0.0)) throw Error(ErrorCode::InvalidArgument, "dx > 0 and dt > 0 required");
    return {diffusivity * dt / (dx * dx), velocity * dt / dx};
}

StencilWeights stencil_weights(const FtcsCoefficients& c, AdvectionStencil stencil) {
    const double a = c.alpha;
    const double b = c.beta;
    switch (stencil) {
        case AdvectionStencil::ForwardAsInPaper:
            return {a, 1.0 - 2.0 * a + b, a - b};
        case AdvectionStencil::Central:
            return {a + 0.5 * b, 1.0 - 2.0 * a, a - 0.5 * b};
        case AdvectionStencil::Upwind:
            if (b >= 0.0) return {a + b, 1.0 - 2.0 * a - b, a};
            return {a, 1.0 - 2.0 * a + b, a - b};
    }
    return {};
}

StabilityReport check_stability(const FtcsCoefficients& c, AdvectionStencil stencil) {
    StabilityReport r;
    r.alpha = c.alpha;
    r.beta = c.beta;
    r.cell_peclet = c.alpha > 0.0 ? c.beta / c.alpha : 0.0;
    r.weights = stencil_weights(c, stencil);
    r.alpha_within_half = c.alpha > 0.0 && c.alpha <= 0.5;
    r.weights_nonnegative = r.weights.left >= 0.0 && r.weights.centre >= 0.0 && r.weights.right >= 0.0;
    r.stable = r.alpha_within_half && r.weights_nonnegative;
    return r;
}

std::string StabilityReport::violations() const {
    std::string out;
    auto add = [&](const std::string& s) { out += out.empty() ? s : "; " + s; };
    if (!alpha_within_half) add("alpha = " + std::to_string(alpha) + " violates 0 < alpha <= 1/2");
    if (!weights_nonnegative) {
        add("stencil weights (" + std::to_string(weights.left) + ", " + std::to_string(weights.centre) + ", " +
            std::to_string(weights.right) + ") violate nonnegativity");
    }
    return out;
}

std::vector<double> ftcs_step(std::span<const double> row, const FtcsCoefficients& c, AdvectionStencil stencil) {
    const std::vector<double> alphas(row.size(), c.alpha);
    return ftcs_step(row, alphas, c.beta, stencil);
}

std::vector<double> ftcs_step(std::span<const double> row, std::span<const double> alphas, double beta,
                              AdvectionStencil stencil) {
    if (row.size() < 3) throw Error(ErrorCode::LengthMismatch, "a row needs at least 3 nodes (M >= 2)");
    if (alphas.size() != row.size()) {
        throw Error(ErrorCode::LengthMismatch, "need one alpha per node (" + std::to_string(row.size()) + ")");
    }
    std::vector<double> out(row.size());
    step_into(row, alphas, beta, stencil, out);
    return out;
}

SolutionSurface solve_ftcs(const ValidatedScenario& scenario, const UniformGrid& grid, const SolveOptions& options) {
    require_matching_grid(scenario, grid);
    const FtcsCoefficients c = ftcs_coefficients(scenario.uniform_diffusivity(), scenario.velocity(), grid.dx, grid.dt);
    const StabilityReport report = check_stability(c, options.stencil);
    if (!report.stable && !options.allow_unstable) {
        throw Error(ErrorCode::UnstableParameters, report.violations() + " (pass --unsafe-override to run anyway)");
    }
    const std::vector<double> alphas(grid.nodes_per_level(), c.alpha);
    return march(scenario, grid, alphas, c.beta, options);
}

std::vector<double> piecewise_diffusivity(const SplitDiffusivity& d, const UniformGrid& grid) {
    if (grid.M % 2 != 0) {
        throw Error(ErrorCode::InterfaceOffGrid, "interface x = L/2 must be a grid node (M even, got " +
                                                     std::to_string(grid.M) + ")");
    }
    const int interface = grid.M / 2;
    std::vector<double> out(grid.nodes_per_level());
    for (int m = 0; m <= grid.M; ++m) {
        out[static_cast<std::size_t>(m)] = m < interface ? d.left : (m > interface ? d.right : (d.left + d.right) / 2.0);
    }
    return out;
}

SolutionSurface solve_ftcs_piecewise(const ValidatedScenario& scenario, const UniformGrid& grid,
                                     const SolveOptions& options) {
    require_matching_grid(scenario, grid);
    const SplitDiffusivity split = scenario.is_split()
                                       ? scenario.split_diffusivity()
                                       : SplitDiffusivity{scenario.uniform_diffusivity(), scenario.uniform_diffusivity()};
    const std::vector<double> node_d = piecewise_diffusivity(split, grid);

    // The weights must be nonnegative for both the largest and smallest alpha.
    for (double d : {std::max(split.left, split.right), std::min(split.left, split.right)}) {
        const StabilityReport report =
            check_stability(ftcs_coefficients(d, scenario.velocity(), grid.dx, grid.dt), options.stencil);
        if (!report.stable && !options.allow_unstable) {
            throw Error(ErrorCode::UnstableParameters,
                        "at D = " + std::to_string(d) + ": " + report.violations() +
                            " (pass --unsafe-override to run anyway)");
        }
    }

    std::vector<double> alphas(node_d.size());
    for (std::size_t m = 0; m < node_d.size(); ++m) {
        alphas[m] = ftcs_coefficients(node_d[m], scenario.velocity(), grid.dx, grid.dt).alpha;
    }
    const double beta = ftcs_coefficients(split.left, scenario.velocity(), grid.dx, grid.dt).beta;
    return march(scenario, grid, alphas, beta, options);
}

}  // namespace adelab
