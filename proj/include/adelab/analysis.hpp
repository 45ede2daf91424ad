// Verification: error reports, pollutant decay tables, convergence studies.
#pragma once

#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "adelab/fdm.hpp"
#include "adelab/model.hpp"

namespace adelab {

struct PollutantSpec {
    std::string name;
    double diffusivity = 0.0;  // m^2/hr
    double velocity = 0.0;     // m/hr
};

/// NH3, CO, CO2 and SO2 in air.
std::vector<PollutantSpec> builtin_pollutants();

/// JSON array of {"name", "diffusivity", "velocity"} records.
std::vector<PollutantSpec> parse_pollutants_json(std::istream& in);
std::vector<PollutantSpec> load_pollutants_file(const std::string& path);

/// Evaluator of a reference concentration C(x, t).
using Reference = std::function<double(double x, double t)>;

/// Below this magnitude the reference is treated as zero and no percent
/// error is reported.
inline constexpr double kPercentFloor = 1e-12;

struct ErrorEntry {
    int m = 0;
    int n = 0;
    double x = 0.0;
    double t = 0.0;
    double exact = 0.0;
    double approx = 0.0;
    double abs_error = 0.0;
    std::optional<double> percent_error;
};

struct ErrorReport {
    UniformGrid grid;
    std::vector<ErrorEntry> entries;
    double sup_norm = 0.0;
    /// Entries whose reference magnitude was too small for a percent error.
    int percent_omitted = 0;

    /// nullptr if (m, n) is not an interior node of the report.
    const ErrorEntry* find(int m, int n) const;
};

/// Compares every interior node (0 < m < M) of every stored level.
ErrorReport pointwise_error(const SolutionSurface& approx, const Reference& exact);
/// Surface-to-surface comparison on identical grids.
ErrorReport pointwise_error(const SolutionSurface& approx, const SolutionSurface& exact);

struct PollutantRow {
    PollutantSpec pollutant;
    double rate = 0.0;  // machine pi
    std::optional<double> rate_coarse_pi;
    FtcsCoefficients coefficients;
    std::string label;  // e.g. "e^{-0.78167 t} sin(pi x)"
};

PollutantRow pollutant_row(const PollutantSpec& pollutant, double length, double dx, double dt,
                           bool include_coarse_pi);
std::vector<PollutantRow> pollutant_table(const std::vector<PollutantSpec>& registry, double length, double dx,
                                          double dt, bool include_coarse_pi);

/// Sup-norm over all nodes of the last stored level against the series
/// solution (K terms) at the same time.
double sup_error_at_final_level(const SolutionSurface& surface, const ValidatedScenario& scenario,
                                int terms = 64);

struct ConvergenceLevel {
    int M = 0;
    int N = 0;
    double dx = 0.0;
    double alpha = 0.0;
    double sup_error = 0.0;
};

struct ConvergenceResult {
    std::vector<ConvergenceLevel> levels;
    /// log2(e_i / e_{i+1}); nullopt when either error is zero.
    std::vector<std::optional<double>> orders;
};

/// Refines (M0, N0) -> (2 M0, 4 N0) -> ... so alpha stays fixed, solving
/// each level with solve_ftcs and measuring the sup-norm error at t = T
/// against the series solution. Requires levels >= 3 and uniform D.
ConvergenceResult convergence_study(const ValidatedScenario& scenario, AdvectionStencil stencil, int M0, int N0,
                                    int levels = 3, int terms = 64);

}  // namespace adelab
