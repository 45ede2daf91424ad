// Separation-of-variables solution of the advection-diffusion equation.
//
// The substitution C = A V with
//   A(x, t) = A0 exp(-u^2 t / (4D)) exp(u x / (2D))
// removes the advection term and leaves V_t = D V_xx with V(0,t) = V(L,t) = 0,
// so V is a half-range sine series whose coefficients come from the
// transformed initial condition exp(-u x / (2D)) f(x).
#pragma once

#include <numbers>
#include <vector>

#include "adelab/model.hpp"

namespace adelab {

inline constexpr int kDefaultTerms = 64;
inline constexpr int kDefaultPanels = 2048;
/// Coarse approximation of pi, used only to reproduce the reference decay rates.
inline constexpr double kPaperPi = 3.14;

/// A(x, t). Throws ExponentOverflow when |u x / (2D)| > 700.
double transform_factor(double x, double t, double velocity, double diffusivity, double a0 = 1.0);

struct DecayRate {
    int mode = 1;
    double advective = 0.0;  // u^2 / (4D), 1/hr
    double diffusive = 0.0;  // D (n pi / L)^2, 1/hr
    double rate = 0.0;       // advective + diffusive
};

/// Exponent of a single-mode closed form exp(-rate t) sin(n pi x / L).
DecayRate mode_decay_rate(int mode, double diffusivity, double velocity, double length,
                          double pi = std::numbers::pi);

/// b_n = (2/L) int_0^L exp(-u x / (2D)) f(x) sin(n pi x / L) dx for n = 1..terms.
///
/// Composite Simpson over `panels` intervals, applied piecewise between the
/// initial condition's breakpoints so kinks in tabulated data fall on panel
/// edges. Each b_n is recomputed with panels/2 and QuadratureNotConverged is
/// thrown if the two disagree by more than 1e-10.
std::vector<double> fourier_coefficients(const InitialCondition& ic, double velocity, double diffusivity,
                                         double length, int terms, int panels = kDefaultPanels);

/// fourier_coefficients starting at `panels` and doubling up to `max_panels`
/// until the Richardson check passes. Rethrows the last QuadratureNotConverged.
std::vector<double> fourier_coefficients_refined(const InitialCondition& ic, double velocity, double diffusivity,
                                                 double length, int terms, int panels = kDefaultPanels,
                                                 int max_panels = 1 << 20);

/// Truncated series C(x, t) = A(x, t) sum_n b_n sin(n pi x / L) exp(-D (n pi / L)^2 t).
class SeriesSolution {
public:
    SeriesSolution(std::vector<double> coefficients, double velocity, double diffusivity, double length);

    /// Coefficients from the scenario's initial condition. Requires uniform D.
    static SeriesSolution from_scenario(const ValidatedScenario& scenario, int terms = kDefaultTerms,
                                        int panels = kDefaultPanels);
    /// As from_scenario, refining the quadrature as needed.
    static SeriesSolution from_scenario_refined(const ValidatedScenario& scenario, int terms = kDefaultTerms);

    struct Value {
        double concentration = 0.0;
        /// |b_K| exp(-D (K pi / L)^2 t), magnitude of the last retained term.
        double tail_estimate = 0.0;
    };

    Value evaluate(double x, double t) const;
    double operator()(double x, double t) const { return evaluate(x, t).concentration; }

    const std::vector<double>& coefficients() const { return coefficients_; }
    int terms() const { return static_cast<int>(coefficients_.size()); }
    double velocity() const { return velocity_; }
    double diffusivity() const { return diffusivity_; }
    double length() const { return length_; }

private:
    std::vector<double> coefficients_;
    double velocity_;
    double diffusivity_;
    double length_;
};

SeriesSolution::Value series_evaluate(const SeriesSolution& solution, double x, double t);

/// exp(-(u^2/(4D) + D (n pi / L)^2) t) sin(n pi x / L) for a SineMode{n}
/// initial condition. This is the exact solution only when u = 0; for u != 0
/// it differs from the series by the advective transformation of f.
/// Throws NotSineMode for tabulated initial conditions.
double closed_form_reference(double x, double t, const ValidatedScenario& scenario);

/// Samples a space-time evaluator on every node of `grid`.
template <class Evaluator>
SolutionSurface sample_surface(const UniformGrid& grid, Evaluator&& eval) {
    std::vector<double> values;
    values.reserve(grid.nodes_per_level() * (static_cast<std::size_t>(grid.N) + 1));
    for (int n = 0; n <= grid.N; ++n) {
        for (int m = 0; m <= grid.M; ++m) values.push_back(eval(grid.x(m), grid.t(n)));
    }
    return SolutionSurface(grid, std::move(values));
}

}  // namespace adelab
