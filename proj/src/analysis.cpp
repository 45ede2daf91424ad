#include "adelab/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "adelab/analytic.hpp"
#include "adelab/error.hpp"

namespace adelab {

namespace {

constexpr double kAirVelocity = 3.6e-4;  // m/hr

ErrorEntry make_entry(const UniformGrid& g, int m, int n, double exact, double approx) {
    ErrorEntry e;
    e.m = m;
    e.n = n;
    e.x = g.x(m);
    e.t = g.t(n);
    e.exact = exact;
    e.approx = approx;
    e.abs_error = std::abs(exact - approx);
    if (std::abs(exact) > kPercentFloor) e.percent_error = 100.0 * e.abs_error / std::abs(exact);
    return e;
}

template <class ExactAt>
ErrorReport build_report(const SolutionSurface& approx, ExactAt&& exact_at) {
    ErrorReport r;
    r.grid = approx.grid();
    const UniformGrid& g = r.grid;
    for (int n = 0; n < approx.levels(); ++n) {
        for (int m = 1; m < g.M; ++m) {
            ErrorEntry e = make_entry(g, m, n, exact_at(m, n), approx.at(m, n));
            r.sup_norm = std::max(r.sup_norm, e.abs_error);
            if (!e.percent_error) ++r.percent_omitted;
            r.entries.push_back(e);
        }
    }
    return r;
}

}  // namespace

std::vector<PollutantSpec> builtin_pollutants() {
    return {
        {"NH3", 7.92e-2, kAirVelocity},
        {"CO", 7.20e-2, kAirVelocity},
        {"CO2", 5.40e-2, kAirVelocity},
        {"SO2", 4.68e-2, kAirVelocity},
    };
}

std::vector<PollutantSpec> parse_pollutants_json(std::istream& in) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ConfigError, std::string("pollutant registry is not valid JSON: ") + e.what());
    }
    if (!doc.is_array() || doc.empty()) {
        throw Error(ErrorCode::ConfigError, "pollutant registry must be a nonempty JSON array");
    }
    std::vector<PollutantSpec> out;
    for (const json& rec : doc) {
        if (!rec.is_object() || rec.size() != 3 || !rec.contains("name") || !rec.contains("diffusivity") ||
            !rec.contains("velocity") || !rec["name"].is_string() || !rec["diffusivity"].is_number() ||
            !rec["velocity"].is_number()) {
            throw Error(ErrorCode::ConfigError,
                        "each pollutant needs exactly {\"name\": str, \"diffusivity\": num, \"velocity\": num}");
        }
        PollutantSpec p{rec["name"].get<std::string>(), rec["diffusivity"].get<double>(), rec["velocity"].get<double>()};
        if (!(p.diffusivity > 0.0)) {
            throw Error(ErrorCode::NonPositiveDiffusivity, "pollutant " + p.name + " needs diffusivity > 0");
        }
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<PollutantSpec> load_pollutants_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ConfigError, "cannot open pollutant registry " + path);
    return parse_pollutants_json(in);
}

const ErrorEntry* ErrorReport::find(int m, int n) const {
    for (const auto& e : entries) {
        if (e.m == m && e.n == n) return &e;
    }
    return nullptr;
}

ErrorReport pointwise_error(const SolutionSurface& approx, const Reference& exact) {
    const UniformGrid& g = approx.grid();
    return build_report(approx, [&](int m, int n) { return exact(g.x(m), g.t(n)); });
}

ErrorReport pointwise_error(const SolutionSurface& approx, const SolutionSurface& exact) {
    if (!(approx.grid() == exact.grid()) || approx.levels() != exact.levels()) {
        throw Error(ErrorCode::GridMismatch, "surfaces must share grid and level count");
    }
    return build_report(approx, [&](int m, int n) { return exact.at(m, n); });
}

PollutantRow pollutant_row(const PollutantSpec& pollutant, double length, double dx, double dt,
                           bool include_coarse_pi) {
    PollutantRow row;
    row.pollutant = pollutant;
    row.rate = mode_decay_rate(1, pollutant.diffusivity, pollutant.velocity, length).rate;
    if (include_coarse_pi) {
        row.rate_coarse_pi = mode_decay_rate(1, pollutant.diffusivity, pollutant.velocity, length, kPaperPi).rate;
    }
    row.coefficients = ftcs_coefficients(pollutant.diffusivity, pollutant.velocity, dx, dt);

    char buf[96];
    const double shown = row.rate_coarse_pi.value_or(row.rate);
    if (length == 1.0) {
        std::snprintf(buf, sizeof buf, "e^{-%.5f t} sin(pi x)", shown);
    } else {
        std::snprintf(buf, sizeof buf, "e^{-%.5f t} sin(pi x / %g)", shown, length);
    }
    row.label = buf;
    return row;
}

std::vector<PollutantRow> pollutant_table(const std::vector<PollutantSpec>& registry, double length, double dx,
                                          double dt, bool include_coarse_pi) {
    if (registry.empty()) throw Error(ErrorCode::InvalidArgument, "pollutant registry is empty");
    std::vector<PollutantRow> rows;
    rows.reserve(registry.size());
    for (const auto& p : registry) rows.push_back(pollutant_row(p, length, dx, dt, include_coarse_pi));
    return rows;
}

double sup_error_at_final_level(const SolutionSurface& surface, const ValidatedScenario& scenario, int terms) {
    const SeriesSolution series = SeriesSolution::from_scenario_refined(scenario, terms);
    const UniformGrid& g = surface.grid();
    const int n = surface.levels() - 1;
    double sup = 0.0;
    for (int m = 0; m <= g.M; ++m) {
        sup = std::max(sup, std::abs(surface.at(m, n) - series(std::min(g.x(m), g.length), g.t(n))));
    }
    return sup;
}

ConvergenceResult convergence_study(const ValidatedScenario& scenario, AdvectionStencil stencil, int M0, int N0,
                                    int levels, int terms) {
    if (levels < 3) throw Error(ErrorCode::InvalidArgument, "convergence study needs >= 3 refinement levels");
    const SeriesSolution series = SeriesSolution::from_scenario_refined(scenario, terms);

    ConvergenceResult result;
    int M = M0;
    int N = N0;
    for (int level = 0; level < levels; ++level, M *= 2, N *= 4) {
        const UniformGrid grid = build_grid(scenario.length(), scenario.horizon(), M, N);
        SolveOptions options;
        options.stencil = stencil;
        const SolutionSurface surface = solve_ftcs(scenario, grid, options);

        ConvergenceLevel lv;
        lv.M = M;
        lv.N = N;
        lv.dx = grid.dx;
        lv.alpha = ftcs_coefficients(scenario.uniform_diffusivity(), scenario.velocity(), grid.dx, grid.dt).alpha;
        for (int m = 0; m <= M; ++m) {
            const double exact = series(std::min(grid.x(m), grid.length), grid.t(N));
            lv.sup_error = std::max(lv.sup_error, std::abs(surface.at(m, N) - exact));
        }
        result.levels.push_back(lv);
    }
    for (std::size_t i = 0; i + 1 < result.levels.size(); ++i) {
        const double coarse = result.levels[i].sup_error;
        const double fine = result.levels[i + 1].sup_error;
        if (coarse > 0.0 && fine > 0.0) {
            result.orders.emplace_back(std::log2(coarse / fine));
        } else {
            result.orders.emplace_back(std::nullopt);
        }
    }
    return result;
}

}  // namespace adelab
