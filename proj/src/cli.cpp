#include "adelab/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "adelab/analysis.hpp"
#include "adelab/analytic.hpp"
#include "adelab/error.hpp"
#include "adelab/fdm.hpp"
#include "adelab/model.hpp"
#include "adelab/report.hpp"

namespace adelab::cli {

namespace {

namespace fs = std::filesystem;

struct CommandSpec {
    std::string subcommand;
    std::string config;
    std::string registry;
    int M = 5;
    int N = 5;
    std::string stencil = "forward";
    int terms = kDefaultTerms;
    int levels = 3;
    bool paper_pi = false;
    bool unsafe_override = false;
    std::string out_dir = ".";
    bool grid_given = false;
};

std::string fmt(const char* pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

class Session {
public:
    Session(const CommandSpec& cmd, std::ostream& out) : cmd_(cmd), out_(out) {}

    void run() {
        const auto stencil = parse_stencil(cmd_.stencil);
        if (!stencil) throw Error(ErrorCode::InvalidArgument, "unknown stencil " + cmd_.stencil);
        options_.stencil = *stencil;
        options_.allow_unstable = cmd_.unsafe_override;
        prepare_output_dir();

        if (cmd_.subcommand == "solve-analytic") solve_analytic();
        else if (cmd_.subcommand == "solve-fdm") solve_fdm();
        else if (cmd_.subcommand == "compare") compare();
        else if (cmd_.subcommand == "pollutants") pollutants();
        else if (cmd_.subcommand == "split-domain") split_domain();
        else if (cmd_.subcommand == "converge") converge();
    }

private:
    void prepare_output_dir() {
        std::error_code ec;
        fs::create_directories(cmd_.out_dir, ec);
        if (ec || !fs::is_directory(cmd_.out_dir)) {
            throw Error(ErrorCode::SinkWriteFailure, "output directory " + cmd_.out_dir + " is not writable");
        }
    }

    ValidatedScenario scenario(const ScenarioSpec& fallback) const {
        return validate_scenario(cmd_.config.empty() ? fallback : load_scenario_file(cmd_.config));
    }

    UniformGrid grid_for(const ValidatedScenario& s, int M, int N) const {
        return build_grid(s.length(), s.horizon(), M, N);
    }

    template <class Writer>
    void write_file(const std::string& name, Writer&& writer) {
        const fs::path path = fs::path(cmd_.out_dir) / name;
        std::ofstream file(path, std::ios::binary);
        if (!file) throw Error(ErrorCode::SinkWriteFailure, "cannot open " + path.string());
        const std::size_t bytes = writer(file);
        out_ << "wrote " << path.string() << " (" << bytes << " bytes)\n";
    }

    void report_stability(double diffusivity, double velocity, const UniformGrid& g) {
        const StabilityReport r = check_stability(ftcs_coefficients(diffusivity, velocity, g.dx, g.dt), options_.stencil);
        out_ << "alpha = " << format_number(r.alpha) << ", beta = " << format_number(r.beta)
             << ", cell Peclet = " << format_number(r.cell_peclet) << ", stencil = " << to_string(options_.stencil)
             << ", " << (r.stable ? "stable" : "UNSTABLE: " + r.violations()) << "\n";
    }

    void solve_analytic() {
        const ValidatedScenario s = scenario(benchmark_scenario());
        const UniformGrid g = grid_for(s, cmd_.M, cmd_.N);
        const SeriesSolution series = SeriesSolution::from_scenario_refined(s, cmd_.terms);

        double tail = 0.0;
        for (int n = 1; n <= g.N; ++n) tail = std::max(tail, series.evaluate(s.length() / 2, g.t(n)).tail_estimate);
        out_ << "series: K = " << series.terms() << ", largest tail estimate for t > 0: " << format_number(tail)
             << "\n";

        const SolutionSurface surface = sample_surface(g, series);
        write_file("series_surface.csv", [&](std::ostream& f) { return write_surface_csv(surface, f); });
        if (s.initial_condition().is_sine_mode()) {
            const SolutionSurface closed =
                sample_surface(g, [&](double x, double t) { return closed_form_reference(x, t, s); });
            write_file("closed_form_surface.csv", [&](std::ostream& f) { return write_surface_csv(closed, f); });
        } else {
            out_ << "closed form skipped: initial condition is not a single sine mode\n";
        }
    }

    void solve_fdm() {
        const ValidatedScenario s = scenario(benchmark_scenario());
        const UniformGrid g = grid_for(s, cmd_.M, cmd_.N);
        report_stability(s.uniform_diffusivity(), s.velocity(), g);
        const SolutionSurface surface = solve_ftcs(s, g, options_);
        write_file("fdm_surface.csv", [&](std::ostream& f) { return write_surface_csv(surface, f); });
    }

    void compare() {
        const ValidatedScenario s = scenario(benchmark_scenario());
        const UniformGrid g = grid_for(s, cmd_.M, cmd_.N);
        report_stability(s.uniform_diffusivity(), s.velocity(), g);
        const SolutionSurface approx = solve_ftcs(s, g, options_);

        ErrorReport report;
        if (s.initial_condition().is_sine_mode()) {
            out_ << "reference: closed form exp(-(u^2/(4D) + D (n pi / L)^2) t) sin(n pi x / L)\n";
            report = pointwise_error(approx, [&](double x, double t) { return closed_form_reference(x, t, s); });
        } else {
            out_ << "reference: series solution, K = " << cmd_.terms << "\n";
            const SeriesSolution series = SeriesSolution::from_scenario_refined(s, cmd_.terms);
            report = pointwise_error(approx, Reference(series));
        }

        if (report.entries.size() <= 200) {
            for (const auto& e : report.entries) {
                out_ << "x=" << format_number(e.x) << " t=" << format_number(e.t)
                     << " exact=" << fmt("%.6f", e.exact) << " approx=" << fmt("%.6f", e.approx)
                     << " abs=" << fmt("%.3e", e.abs_error)
                     << " pct=" << (e.percent_error ? fmt("%.4f", *e.percent_error) + "%" : std::string("n/a"))
                     << "\n";
            }
        }
        out_ << "sup-norm error = " << format_number(report.sup_norm) << " over " << report.entries.size()
             << " interior nodes";
        if (report.percent_omitted > 0) out_ << " (" << report.percent_omitted << " without percent error)";
        out_ << "\n";
        write_file("error_report.csv", [&](std::ostream& f) { return write_error_csv(report, f); });
    }

    void pollutants() {
        const std::vector<PollutantSpec> registry =
            cmd_.registry.empty() ? builtin_pollutants() : load_pollutants_file(cmd_.registry);
        const ValidatedScenario s = scenario(benchmark_scenario());
        const UniformGrid g = grid_for(s, cmd_.M, cmd_.N);
        const auto rows = pollutant_table(registry, s.length(), g.dx, g.dt, cmd_.paper_pi);

        out_ << "pollutant  D(m^2/hr)  u(m/hr)  rate(pi)  " << (cmd_.paper_pi ? "rate(pi=3.14)  " : "")
             << "alpha  beta  C(x,t)\n";
        for (const auto& r : rows) {
            out_ << r.pollutant.name << "  " << format_number(r.pollutant.diffusivity) << "  "
                 << format_number(r.pollutant.velocity) << "  " << fmt("%.6f", r.rate) << "  "
                 << (r.rate_coarse_pi ? fmt("%.5f", *r.rate_coarse_pi) + "  " : std::string())
                 << fmt("%.3f", r.coefficients.alpha) << "  " << fmt("%.5f", r.coefficients.beta) << "  " << r.label
                 << "\n";
        }
        write_file("pollutants.csv", [&](std::ostream& f) {
            std::string text = "name,diffusivity,velocity,rate,rate_pi_3_14,alpha,beta,label\n";
            for (const auto& r : rows) {
                text += r.pollutant.name + "," + format_number(r.pollutant.diffusivity) + "," +
                        format_number(r.pollutant.velocity) + "," + format_number(r.rate) + "," +
                        (r.rate_coarse_pi ? format_number(*r.rate_coarse_pi) : std::string()) + "," +
                        format_number(r.coefficients.alpha) + "," + format_number(r.coefficients.beta) + ",\"" +
                        r.label + "\"\n";
            }
            f << text;
            if (!f) throw Error(ErrorCode::SinkWriteFailure, "cannot write pollutants.csv");
            return text.size();
        });
    }

    void split_domain() {
        ScenarioSpec fallback = benchmark_scenario();
        fallback.diffusivity = SplitDiffusivity{7.92e-2, 4.68e-2};
        fallback.horizon = 2.0;
        const ValidatedScenario s = scenario(fallback);
        const UniformGrid g = cmd_.grid_given ? grid_for(s, cmd_.M, cmd_.N) : grid_for(s, 20, 200);
        const SolutionSurface surface = solve_ftcs_piecewise(s, g, options_);

        std::vector<int> picks;
        for (double target : {0.5, 1.0, 1.5, 2.0}) {
            if (g.dt <= 0.0) break;
            const long n = std::lround(target / g.dt);
            if (n >= 1 && n <= g.N && std::abs(g.t(static_cast<int>(n)) - target) <= 1e-9) {
                picks.push_back(static_cast<int>(n));
            }
        }
        if (picks.empty()) {
            for (int q = 1; q <= 4; ++q) picks.push_back(std::max(1, g.N * q / 4));
        }

        std::vector<ProfileSeries> profiles;
        for (int n : picks) {
            const ProfileSeries p = spatial_profile(surface, n, "C_t" + format_number(g.t(n)));
            std::size_t arg = 0;
            for (std::size_t i = 1; i < p.points.size(); ++i) {
                if (p.points[i].second > p.points[arg].second) arg = i;
            }
            out_ << "t = " << format_number(g.t(n)) << ": max C = " << fmt("%.6f", p.points[arg].second)
                 << " at x = " << format_number(p.points[arg].first) << "\n";
            profiles.push_back(p);
        }
        write_file("split_surface.csv", [&](std::ostream& f) { return write_surface_csv(surface, f); });
        write_file("split_profiles.csv", [&](std::ostream& f) { return write_profile_csv(profiles, f); });
        write_file("split_profiles.svg",
                   [&](std::ostream& f) { return write_profile_svg(profiles, {"x (m)", "C"}, f); });
    }

    void converge() {
        const ValidatedScenario s = scenario(benchmark_scenario());
        const ConvergenceResult r = convergence_study(s, options_.stencil, cmd_.M, cmd_.N, cmd_.levels, cmd_.terms);
        std::string csv = "M,N,dx,alpha,sup_error,order\n";
        for (std::size_t i = 0; i < r.levels.size(); ++i) {
            const auto& lv = r.levels[i];
            std::string order;
            if (i > 0) order = r.orders[i - 1] ? format_number(*r.orders[i - 1]) : "undefined";
            out_ << "M=" << lv.M << " N=" << lv.N << " dx=" << format_number(lv.dx)
                 << " alpha=" << format_number(lv.alpha) << " sup_error=" << format_number(lv.sup_error)
                 << (i > 0 ? " order=" + order : std::string()) << "\n";
            csv += std::to_string(lv.M) + "," + std::to_string(lv.N) + "," + format_number(lv.dx) + "," +
                   format_number(lv.alpha) + "," + format_number(lv.sup_error) + "," + order + "\n";
        }
        write_file("converge.csv", [&](std::ostream& f) {
            f << csv;
            if (!f) throw Error(ErrorCode::SinkWriteFailure, "cannot write converge.csv");
            return csv.size();
        });
    }

    const CommandSpec& cmd_;
    std::ostream& out_;
    SolveOptions options_;
};

void add_common_options(CLI::App* sub, CommandSpec& cmd) {
    sub->add_option("--config", cmd.config, "Scenario JSON file")->check(CLI::ExistingFile);
    sub->add_option("-M", cmd.M, "Spatial intervals");
    sub->add_option("-N", cmd.N, "Time steps");
    sub->add_option("--stencil", cmd.stencil, "Advection stencil")
        ->check(CLI::IsMember({"forward", "central", "upwind"}));
    sub->add_option("--terms", cmd.terms, "Series truncation K")->check(CLI::PositiveNumber);
    sub->add_flag("--paper-pi", cmd.paper_pi, "Also report decay rates with pi = 3.14");
    sub->add_flag("--unsafe-override", cmd.unsafe_override, "Run even when the FTCS stability check fails");
    sub->add_option("--out", cmd.out_dir, "Output directory");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Advection-diffusion solver laboratory", "adelab"};
    app.require_subcommand(1, 1);

    CommandSpec cmd;
    const std::vector<std::pair<std::string, std::string>> subcommands = {
        {"solve-analytic", "Series and closed-form surfaces"},
        {"solve-fdm", "FTCS surface"},
        {"compare", "FTCS against the analytic reference"},
        {"pollutants", "Decay rates and FTCS coefficients per pollutant"},
        {"split-domain", "Two-diffusivity FTCS run with profile plots"},
        {"converge", "Grid refinement study at fixed alpha"},
    };
    std::vector<CLI::App*> subs;
    for (const auto& [name, help] : subcommands) {
        CLI::App* sub = app.add_subcommand(name, help);
        add_common_options(sub, cmd);
        subs.push_back(sub);
    }
    app.get_subcommand("pollutants")->add_option("--registry", cmd.registry, "Pollutant registry JSON")
        ->check(CLI::ExistingFile);
    app.get_subcommand("converge")->add_option("--levels", cmd.levels, "Refinement levels (>= 3)");

    std::vector<const char*> argv{"adelab"};
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    for (CLI::App* sub : subs) {
        if (sub->parsed()) {
            cmd.subcommand = sub->get_name();
            cmd.grid_given = sub->count("-M") > 0 || sub->count("-N") > 0;
        }
    }

    try {
        Session(cmd, out).run();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
    return kExitOk;
}

}  // namespace adelab::cli
