// CSV and SVG emission. All writers produce deterministic bytes: numbers are
// printed with 9 significant digits, lines end in '\n'.
#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "adelab/analysis.hpp"
#include "adelab/model.hpp"

namespace adelab {

/// "%.9g", with -0 printed as 0.
std::string format_number(double value);

struct ProfileSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;  // (abscissa, C), abscissae strictly increasing
};

/// C(x, t_n) for every x node of level n.
ProfileSeries spatial_profile(const SolutionSurface& surface, int n, std::string label);
/// C(x_m, t) for every stored level at node m.
ProfileSeries temporal_profile(const SolutionSurface& surface, int m, std::string label);

/// Header "x,t,C"; one row per node, time-outer. Returns bytes written.
std::size_t write_surface_csv(const SolutionSurface& surface, std::ostream& sink);

/// Header "x,<label1>,<label2>,..."; all series must share abscissae.
std::size_t write_profile_csv(std::span<const ProfileSeries> series, std::ostream& sink);

/// Header "x,t,exact,approx,abs_error,percent_error"; percent is empty where omitted.
std::size_t write_error_csv(const ErrorReport& report, std::ostream& sink);

struct AxisLabels {
    std::string x = "x";
    std::string y = "C";
};

/// Standalone SVG 1.1 line plot: one polyline per series, ticked axes, legend.
std::size_t write_profile_svg(std::span<const ProfileSeries> series, const AxisLabels& labels, std::ostream& sink);

}  // namespace adelab
