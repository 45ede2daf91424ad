#include "adelab/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "adelab/error.hpp"

namespace adelab {

namespace {

constexpr double kBoundaryTolerance = 1e-12;

void require_finite(double value, const char* what) {
    if (!std::isfinite(value)) {
        throw Error(ErrorCode::InvalidScenario, std::string(what) + " must be finite");
    }
}

void require_positive_diffusivity(double d, const char* what) {
    require_finite(d, what);
    if (d <= 0.0) {
        throw Error(ErrorCode::NonPositiveDiffusivity,
                    std::string(what) + " must satisfy D > 0 (got " + std::to_string(d) + ")");
    }
}

Samples normalize_samples(const Samples& raw, double length) {
    if (raw.xs.size() != raw.fs.size()) {
        throw Error(ErrorCode::InvalidScenario, "samples need one f value per abscissa");
    }
    if (raw.xs.size() < 2) {
        throw Error(ErrorCode::InvalidScenario, "samples need at least two points spanning [0, L]");
    }
    std::vector<std::size_t> order(raw.xs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i : order) {
        require_finite(raw.xs[i], "sample abscissa");
        require_finite(raw.fs[i], "sample value");
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return raw.xs[a] < raw.xs[b]; });

    Samples out;
    for (std::size_t i : order) {
        if (!out.xs.empty() && out.xs.back() == raw.xs[i]) {
            if (out.fs.back() != raw.fs[i]) {
                throw Error(ErrorCode::InvalidScenario,
                            "samples give two different values at x = " + std::to_string(raw.xs[i]));
            }
            continue;
        }
        out.xs.push_back(raw.xs[i]);
        out.fs.push_back(raw.fs[i]);
    }
    if (out.xs.size() < 2) {
        throw Error(ErrorCode::InvalidScenario, "samples need at least two distinct abscissae");
    }
    if (std::abs(out.xs.front()) > kBoundaryTolerance ||
        std::abs(out.xs.back() - length) > kBoundaryTolerance) {
        throw Error(ErrorCode::InvalidScenario, "sample abscissae must span [0, L] exactly");
    }
    if (std::abs(out.fs.front()) > kBoundaryTolerance ||
        std::abs(out.fs.back()) > kBoundaryTolerance) {
        throw Error(ErrorCode::IncompatibleIC,
                    "initial condition must vanish at x = 0 and x = L to match C(0,t) = C(L,t) = 0");
    }
    return out;
}

}  // namespace

double InitialCondition::operator()(double x, double length) const {
    if (const auto* mode = sine_mode()) {
        return std::sin(mode->n * std::numbers::pi * x / length);
    }
    const auto& s = *samples();
    if (x <= s.xs.front()) return s.fs.front();
    if (x >= s.xs.back()) return s.fs.back();
    const auto hi = static_cast<std::size_t>(std::upper_bound(s.xs.begin(), s.xs.end(), x) - s.xs.begin());
    const std::size_t lo = hi - 1;
    const double w = (x - s.xs[lo]) / (s.xs[hi] - s.xs[lo]);
    return (1.0 - w) * s.fs[lo] + w * s.fs[hi];
}

std::vector<double> InitialCondition::breakpoints(double length) const {
    if (const auto* s = samples()) {
        std::vector<double> pts;
        pts.push_back(0.0);
        for (double x : s->xs) {
            if (x > 0.0 && x < length) pts.push_back(x);
        }
        pts.push_back(length);
        return pts;
    }
    return {0.0, length};
}

double ValidatedScenario::uniform_diffusivity() const {
    if (const auto* d = std::get_if<UniformDiffusivity>(&spec_.diffusivity)) return d->value;
    throw Error(ErrorCode::InvalidScenario, "operation requires a uniform diffusivity D");
}

SplitDiffusivity ValidatedScenario::split_diffusivity() const {
    if (const auto* d = std::get_if<SplitDiffusivity>(&spec_.diffusivity)) return *d;
    throw Error(ErrorCode::InvalidScenario, "operation requires split diffusivities D1 and D2");
}

double ValidatedScenario::max_diffusivity() const {
    if (const auto* d = std::get_if<SplitDiffusivity>(&spec_.diffusivity)) return std::max(d->left, d->right);
    return uniform_diffusivity();
}

double ValidatedScenario::min_diffusivity() const {
    if (const auto* d = std::get_if<SplitDiffusivity>(&spec_.diffusivity)) return std::min(d->left, d->right);
    return uniform_diffusivity();
}

ValidatedScenario validate_scenario(const ScenarioSpec& raw) {
    ScenarioSpec spec = raw;

    double min_d = 0.0;
    if (const auto* d = std::get_if<UniformDiffusivity>(&spec.diffusivity)) {
        require_positive_diffusivity(d->value, "D");
        min_d = d->value;
    } else {
        const auto& split = std::get<SplitDiffusivity>(spec.diffusivity);
        require_positive_diffusivity(split.left, "D1");
        require_positive_diffusivity(split.right, "D2");
        min_d = std::min(split.left, split.right);
    }

    require_finite(spec.velocity, "u");
    require_finite(spec.length, "L");
    require_finite(spec.horizon, "T");
    if (spec.length <= 0.0) throw Error(ErrorCode::InvalidScenario, "L > 0 required");
    if (spec.horizon < 0.0) throw Error(ErrorCode::InvalidScenario, "T >= 0 required");
    if (spec.bc_left != 0.0 || spec.bc_right != 0.0) {
        throw Error(ErrorCode::InvalidScenario, "boundary values must be C(0,t) = C(L,t) = 0");
    }

    const double exponent = std::abs(spec.velocity) * spec.length / (2.0 * min_d);
    if (!(exponent <= kMaxTransformExponent)) {
        throw Error(ErrorCode::ExponentOverflow,
                    "|u| L / (2D) = " + std::to_string(exponent) + " exceeds 700");
    }

    if (const auto* mode = spec.initial_condition.sine_mode()) {
        if (mode->n < 1) throw Error(ErrorCode::InvalidScenario, "sine mode n >= 1 required");
    } else {
        spec.initial_condition = InitialCondition(normalize_samples(*spec.initial_condition.samples(), spec.length));
    }

    return ValidatedScenario(std::move(spec));
}

ScenarioSpec benchmark_scenario() {
    ScenarioSpec spec;
    spec.diffusivity = UniformDiffusivity{3.6e-3};
    spec.velocity = 3.6e-4;
    spec.length = 1.0;
    spec.horizon = 1.0;
    spec.initial_condition = SineMode{1};
    return spec;
}

UniformGrid build_grid(double length, double horizon, int M, int N) {
    if (M < 2 || N < 1) {
        throw Error(ErrorCode::DegenerateGrid,
                    "grid needs M >= 2 and N >= 1 (got M = " + std::to_string(M) + ", N = " + std::to_string(N) + ")");
    }
    if (!(length > 0.0) || !(horizon >= 0.0) || !std::isfinite(length) || !std::isfinite(horizon)) {
        throw Error(ErrorCode::DegenerateGrid, "grid needs L > 0 and T >= 0");
    }
    UniformGrid g;
    g.length = length;
    g.horizon = horizon;
    g.M = M;
    g.N = N;
    g.dx = length / M;
    g.dt = horizon / N;
    return g;
}

SolutionSurface::SolutionSurface(UniformGrid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    const std::size_t width = grid_.nodes_per_level();
    if (values_.empty() || values_.size() % width != 0 ||
        values_.size() / width > static_cast<std::size_t>(grid_.N) + 1) {
        throw Error(ErrorCode::LengthMismatch, "surface values must hold 1..N+1 full levels of M+1 nodes");
    }
}

std::span<const double> SolutionSurface::level(int n) const {
    return std::span<const double>(values_).subspan(index(0, n), grid_.nodes_per_level());
}

std::size_t SolutionSurface::index(int m, int n) const {
    if (m < 0 || m > grid_.M || n < 0 || n >= levels()) {
        throw Error(ErrorCode::LengthMismatch,
                    "node (" + std::to_string(m) + ", " + std::to_string(n) + ") outside surface");
    }
    return static_cast<std::size_t>(n) * grid_.nodes_per_level() + static_cast<std::size_t>(m);
}

ScenarioSpec parse_scenario_json(std::istream& in) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ConfigError, std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw Error(ErrorCode::ConfigError, "scenario must be a JSON object");

    static const std::vector<std::string> known = {"D", "D1", "D2", "u", "L", "T", "ic"};
    for (const auto& [key, _] : doc.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw Error(ErrorCode::ConfigError, "unknown scenario key \"" + key + "\"");
        }
    }

    auto number = [&](const json& node, const std::string& key) {
        if (!node.contains(key)) throw Error(ErrorCode::ConfigError, "missing key \"" + key + "\"");
        if (!node.at(key).is_number()) throw Error(ErrorCode::ConfigError, "\"" + key + "\" must be a number");
        return node.at(key).get<double>();
    };

    ScenarioSpec spec;
    const bool has_uniform = doc.contains("D");
    const bool has_split = doc.contains("D1") || doc.contains("D2");
    if (has_uniform == has_split) {
        throw Error(ErrorCode::ConfigError, "give either \"D\" or both \"D1\" and \"D2\"");
    }
    if (has_uniform) {
        spec.diffusivity = UniformDiffusivity{number(doc, "D")};
    } else {
        spec.diffusivity = SplitDiffusivity{number(doc, "D1"), number(doc, "D2")};
    }
    spec.velocity = number(doc, "u");
    spec.length = number(doc, "L");
    spec.horizon = number(doc, "T");

    if (!doc.contains("ic") || !doc.at("ic").is_object() || doc.at("ic").size() != 1) {
        throw Error(ErrorCode::ConfigError, "\"ic\" must be {\"sine_mode\": n} or {\"samples\": [[x, f], ...]}");
    }
    const json& ic = doc.at("ic");
    if (ic.contains("sine_mode")) {
        if (!ic.at("sine_mode").is_number_integer()) {
            throw Error(ErrorCode::ConfigError, "\"sine_mode\" must be an integer");
        }
        spec.initial_condition = SineMode{ic.at("sine_mode").get<int>()};
    } else if (ic.contains("samples")) {
        Samples samples;
        const json& rows = ic.at("samples");
        if (!rows.is_array()) throw Error(ErrorCode::ConfigError, "\"samples\" must be an array of [x, f] pairs");
        for (const json& row : rows) {
            if (!row.is_array() || row.size() != 2 || !row[0].is_number() || !row[1].is_number()) {
                throw Error(ErrorCode::ConfigError, "each sample must be a numeric [x, f] pair");
            }
            samples.xs.push_back(row[0].get<double>());
            samples.fs.push_back(row[1].get<double>());
        }
        spec.initial_condition = std::move(samples);
    } else {
        throw Error(ErrorCode::ConfigError, "unknown \"ic\" variant");
    }
    return spec;
}

ScenarioSpec parse_scenario_json(const std::string& text) {
    std::istringstream in(text);
    return parse_scenario_json(in);
}

ScenarioSpec load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ConfigError, "cannot open scenario file " + path);
    return parse_scenario_json(in);
}

}  // namespace adelab
