// Explicit forward-time, centred-space (FTCS) finite differences.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adelab/model.hpp"

namespace adelab {

/// Discretisation of the advection term u C_x.
enum class AdvectionStencil {
    /// -beta (V[m+1] - V[m]); the forward difference of the published scheme.
    ForwardAsInPaper,
    /// -(beta/2) (V[m+1] - V[m-1])
    Central,
    /// -beta (V[m] - V[m-1]) for u > 0, mirrored for u < 0.
    Upwind,
};

std::string_view to_string(AdvectionStencil stencil);
/// Accepts "forward", "central", "upwind".
std::optional<AdvectionStencil> parse_stencil(std::string_view name);

struct FtcsCoefficients {
    double alpha = 0.0;  // D dt / dx^2
    double beta = 0.0;   // u dt / dx
};

FtcsCoefficients ftcs_coefficients(double diffusivity, double velocity, double dx, double dt);

/// V[m]^{n+1} = left V[m-1] + centre V[m] + right V[m+1]
struct StencilWeights {
    double left = 0.0;
    double centre = 0.0;
    double right = 0.0;
};

StencilWeights stencil_weights(const FtcsCoefficients& c, AdvectionStencil stencil);

struct StabilityReport {
    double alpha = 0.0;
    double beta = 0.0;
    double cell_peclet = 0.0;  // u dx / D = beta / alpha
    StencilWeights weights;
    bool alpha_within_half = false;
    bool weights_nonnegative = false;
    bool stable = false;

    /// Human-readable list of failed rules; empty when stable.
    std::string violations() const;
};

StabilityReport check_stability(const FtcsCoefficients& c, AdvectionStencil stencil);

/// One explicit step. Interior nodes are updated, boundary entries reset to 0.
/// Throws LengthMismatch for rows shorter than 3 nodes.
std::vector<double> ftcs_step(std::span<const double> row, const FtcsCoefficients& c, AdvectionStencil stencil);

/// Variable-diffusivity step: alphas[m] is D(x_m) dt / dx^2, one per node.
std::vector<double> ftcs_step(std::span<const double> row, std::span<const double> alphas, double beta,
                              AdvectionStencil stencil);

struct SolveOptions {
    AdvectionStencil stencil = AdvectionStencil::ForwardAsInPaper;
    /// March even if check_stability fails.
    bool allow_unstable = false;
    /// Number of steps to take; defaults to grid.N. Zero yields the initial level only.
    std::optional<int> steps;
};

/// Marches the sampled initial condition through the grid with a uniform D.
/// Throws UnstableParameters unless stable or allow_unstable is set.
SolutionSurface solve_ftcs(const ValidatedScenario& scenario, const UniformGrid& grid,
                           const SolveOptions& options = {});

/// Node diffusivities for a split scenario: D1 left of L/2, D2 right of it,
/// (D1 + D2)/2 on the interface node. Throws InterfaceOffGrid for odd M.
std::vector<double> piecewise_diffusivity(const SplitDiffusivity& d, const UniformGrid& grid);

/// As solve_ftcs with per-node alpha. Stability is judged on max(D1, D2).
/// A uniform scenario is treated as D1 = D2 = D.
SolutionSurface solve_ftcs_piecewise(const ValidatedScenario& scenario, const UniformGrid& grid,
                                     const SolveOptions& options = {});

}  // namespace adelab
