#include "adelab/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "adelab/error.hpp"

namespace adelab {

namespace {

constexpr double kQuadratureAgreement = 1e-10;

double advection_exponent(double x, double velocity, double diffusivity) {
    const double e = velocity * x / (2.0 * diffusivity);
    if (!(std::abs(e) <= kMaxTransformExponent)) {
        throw Error(ErrorCode::ExponentOverflow,
                    "|u x / (2D)| = " + std::to_string(std::abs(e)) + " exceeds 700");
    }
    return e;
}

int even_at_least(int n, int floor) {
    n = std::max(n, floor);
    return n % 2 == 0 ? n : n + 1;
}

// Composite Simpson of exp(-c x) f(x) sin(n pi x / L) over [a, b], n = 1..terms,
// added into `sums`.
void add_simpson_moments(const InitialCondition& ic, double c, double length, double a, double b,
                         int panels, std::vector<double>& sums) {
    const double h = (b - a) / panels;
    const int terms = static_cast<int>(sums.size());
    std::vector<double> local(sums.size(), 0.0);
    for (int i = 0; i <= panels; ++i) {
        const double x = (i == panels) ? b : a + i * h;
        const double weight = (i == 0 || i == panels) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        const double g = weight * std::exp(-c * x) * ic(x, length);
        if (g == 0.0) continue;
        const double theta = std::numbers::pi * x / length;
        for (int n = 1; n <= terms; ++n) local[n - 1] += g * std::sin(n * theta);
    }
    for (int n = 0; n < terms; ++n) sums[n] += local[n] * h / 3.0;
}

std::vector<double> sine_moments(const InitialCondition& ic, double c, double length, int terms,
                                 int panels) {
    std::vector<double> sums(static_cast<std::size_t>(terms), 0.0);
    const std::vector<double> cuts = ic.breakpoints(length);
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        const double a = cuts[s];
        const double b = cuts[s + 1];
        const int share = (cuts.size() == 2)
                              ? panels
                              : even_at_least(static_cast<int>(std::lround(panels * (b - a) / length)), 2);
        add_simpson_moments(ic, c, length, a, b, share, sums);
    }
    return sums;
}

}  // namespace

double transform_factor(double x, double t, double velocity, double diffusivity, double a0) {
    const double spatial = advection_exponent(x, velocity, diffusivity);
    const double temporal = -velocity * velocity * t / (4.0 * diffusivity);
    return a0 * std::exp(temporal + spatial);
}

DecayRate mode_decay_rate(int mode, double diffusivity, double velocity, double length, double pi) {
    if (mode < 1) throw Error(ErrorCode::InvalidArgument, "mode n >= 1 required");
    if (!(diffusivity > 0.0)) throw Error(ErrorCode::NonPositiveDiffusivity, "D > 0 required");
    DecayRate r;
    r.mode = mode;
    r.advective = velocity * velocity / (4.0 * diffusivity);
    const double k = mode * pi / length;
    r.diffusive = diffusivity * k * k;
    r.rate = r.advective + r.diffusive;
    return r;
}

std::vector<double> fourier_coefficients(const InitialCondition& ic, double velocity, double diffusivity,
                                         double length, int terms, int panels) {
    if (terms < 1) throw Error(ErrorCode::InvalidArgument, "truncation K >= 1 required");
    if (panels < 8 || panels % 2 != 0) {
        throw Error(ErrorCode::InvalidArgument, "quadrature panels must be even and >= 8");
    }
    if (!(diffusivity > 0.0)) throw Error(ErrorCode::NonPositiveDiffusivity, "D > 0 required");
    if (!(length > 0.0)) throw Error(ErrorCode::InvalidArgument, "L > 0 required");
    advection_exponent(length, velocity, diffusivity);

    const double c = velocity / (2.0 * diffusivity);
    std::vector<double> fine = sine_moments(ic, c, length, terms, panels);
    const std::vector<double> coarse = sine_moments(ic, c, length, terms, even_at_least(panels / 2, 4));

    for (int n = 0; n < terms; ++n) {
        const double gap = 2.0 / length * std::abs(fine[n] - coarse[n]);
        if (!(gap <= kQuadratureAgreement)) {
            throw Error(ErrorCode::QuadratureNotConverged,
                        "b_" + std::to_string(n + 1) + " changes by " + std::to_string(gap) +
                            " between " + std::to_string(panels) + " and " + std::to_string(panels / 2) +
                            " panels (limit 1e-10)");
        }
        fine[n] *= 2.0 / length;
    }
    return fine;
}

std::vector<double> fourier_coefficients_refined(const InitialCondition& ic, double velocity, double diffusivity,
                                                 double length, int terms, int panels, int max_panels) {
    for (;;) {
        try {
            return fourier_coefficients(ic, velocity, diffusivity, length, terms, panels);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::QuadratureNotConverged || panels > max_panels / 2) throw;
            panels *= 2;
        }
    }
}

SeriesSolution::SeriesSolution(std::vector<double> coefficients, double velocity, double diffusivity,
                               double length)
    : coefficients_(std::move(coefficients)), velocity_(velocity), diffusivity_(diffusivity), length_(length) {
    if (coefficients_.empty()) throw Error(ErrorCode::InvalidArgument, "series needs K >= 1 coefficients");
    for (double b : coefficients_) {
        if (!std::isfinite(b)) throw Error(ErrorCode::InvalidArgument, "series coefficients must be finite");
    }
    if (!(diffusivity_ > 0.0)) throw Error(ErrorCode::NonPositiveDiffusivity, "D > 0 required");
    if (!(length_ > 0.0)) throw Error(ErrorCode::InvalidArgument, "L > 0 required");
}

SeriesSolution SeriesSolution::from_scenario(const ValidatedScenario& scenario, int terms, int panels) {
    const double d = scenario.uniform_diffusivity();
    return SeriesSolution(
        fourier_coefficients(scenario.initial_condition(), scenario.velocity(), d, scenario.length(), terms, panels),
        scenario.velocity(), d, scenario.length());
}

SeriesSolution SeriesSolution::from_scenario_refined(const ValidatedScenario& scenario, int terms) {
    const double d = scenario.uniform_diffusivity();
    return SeriesSolution(
        fourier_coefficients_refined(scenario.initial_condition(), scenario.velocity(), d, scenario.length(), terms),
        scenario.velocity(), d, scenario.length());
}

SeriesSolution::Value SeriesSolution::evaluate(double x, double t) const {
    const double slack = 1e-12 * length_;
    if (x < -slack || x > length_ + slack || t < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "series is defined on 0 <= x <= L, t >= 0");
    }
    const double wavenumber = std::numbers::pi / length_;
    const int terms = this->terms();
    const double last_k = terms * wavenumber;

    Value v;
    v.tail_estimate = std::abs(coefficients_.back()) * std::exp(-diffusivity_ * last_k * last_k * t);
    if (x <= 0.0 || x >= length_) return v;

    double sum = 0.0;
    for (int n = 1; n <= terms; ++n) {
        const double k = n * wavenumber;
        sum += coefficients_[n - 1] * std::sin(k * x) * std::exp(-diffusivity_ * k * k * t);
    }
    v.concentration = transform_factor(x, t, velocity_, diffusivity_) * sum;
    return v;
}

SeriesSolution::Value series_evaluate(const SeriesSolution& solution, double x, double t) {
    return solution.evaluate(x, t);
}

double closed_form_reference(double x, double t, const ValidatedScenario& scenario) {
    const auto* mode = scenario.initial_condition().sine_mode();
    if (mode == nullptr) {
        throw Error(ErrorCode::NotSineMode, "closed-form reference needs a sine-mode initial condition");
    }
    const double length = scenario.length();
    if (x == 0.0 || x == length) return 0.0;
    const DecayRate r = mode_decay_rate(mode->n, scenario.uniform_diffusivity(), scenario.velocity(), length);
    return std::exp(-r.rate * t) * std::sin(mode->n * std::numbers::pi * x / length);
}

}  // namespace adelab
