#include "adelab/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "adelab/error.hpp"

namespace adelab {

namespace {

std::size_t emit(std::ostream& sink, const std::string& text) {
    sink.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!sink) throw Error(ErrorCode::SinkWriteFailure, "output sink rejected write");
    return text.size();
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

void validate_series(std::span<const ProfileSeries> series) {
    if (series.empty()) throw Error(ErrorCode::EmptySeries, "need at least one series");
    for (const auto& s : series) {
        if (s.points.size() < 2) {
            throw Error(ErrorCode::EmptySeries, "series \"" + s.label + "\" needs at least two points");
        }
        for (std::size_t i = 1; i < s.points.size(); ++i) {
            if (!(s.points[i].first > s.points[i - 1].first)) {
                throw Error(ErrorCode::InvalidSeries, "series \"" + s.label + "\" abscissae must strictly increase");
            }
        }
        for (const auto& [x, y] : s.points) {
            if (!std::isfinite(x) || !std::isfinite(y)) {
                throw Error(ErrorCode::InvalidSeries, "series \"" + s.label + "\" holds non-finite values");
            }
        }
    }
}

constexpr std::array<const char*, 6> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

}  // namespace

std::string format_number(double value) {
    if (value == 0.0) value = 0.0;  // folds -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

ProfileSeries spatial_profile(const SolutionSurface& surface, int n, std::string label) {
    ProfileSeries s{std::move(label), {}};
    const UniformGrid& g = surface.grid();
    for (int m = 0; m <= g.M; ++m) s.points.emplace_back(g.x(m), surface.at(m, n));
    return s;
}

ProfileSeries temporal_profile(const SolutionSurface& surface, int m, std::string label) {
    ProfileSeries s{std::move(label), {}};
    const UniformGrid& g = surface.grid();
    for (int n = 0; n < surface.levels(); ++n) s.points.emplace_back(g.t(n), surface.at(m, n));
    return s;
}

std::size_t write_surface_csv(const SolutionSurface& surface, std::ostream& sink) {
    const UniformGrid& g = surface.grid();
    std::size_t bytes = emit(sink, "x,t,C\n");
    std::string line;
    for (int n = 0; n < surface.levels(); ++n) {
        for (int m = 0; m <= g.M; ++m) {
            line = format_number(g.x(m));
            line += ',';
            line += format_number(g.t(n));
            line += ',';
            line += format_number(surface.at(m, n));
            line += '\n';
            bytes += emit(sink, line);
        }
    }
    sink.flush();
    if (!sink) throw Error(ErrorCode::SinkWriteFailure, "output sink failed on flush");
    return bytes;
}

std::size_t write_profile_csv(std::span<const ProfileSeries> series, std::ostream& sink) {
    validate_series(series);
    const auto& base = series.front().points;
    for (const auto& s : series) {
        if (s.points.size() != base.size() ||
            !std::equal(s.points.begin(), s.points.end(), base.begin(),
                        [](const auto& a, const auto& b) { return a.first == b.first; })) {
            throw Error(ErrorCode::InvalidSeries, "profile CSV needs every series on the same abscissae");
        }
    }
    std::string header = "x";
    for (const auto& s : series) header += "," + s.label;
    std::size_t bytes = emit(sink, header + "\n");
    for (std::size_t i = 0; i < base.size(); ++i) {
        std::string line = format_number(base[i].first);
        for (const auto& s : series) line += "," + format_number(s.points[i].second);
        bytes += emit(sink, line + "\n");
    }
    return bytes;
}

std::size_t write_error_csv(const ErrorReport& report, std::ostream& sink) {
    std::size_t bytes = emit(sink, "x,t,exact,approx,abs_error,percent_error\n");
    for (const auto& e : report.entries) {
        std::string line = format_number(e.x) + "," + format_number(e.t) + "," + format_number(e.exact) + "," +
                           format_number(e.approx) + "," + format_number(e.abs_error) + ",";
        if (e.percent_error) line += format_number(*e.percent_error);
        bytes += emit(sink, line + "\n");
    }
    return bytes;
}

std::size_t write_profile_svg(std::span<const ProfileSeries> series, const AxisLabels& labels, std::ostream& sink) {
    validate_series(series);

    constexpr double width = 640.0;
    constexpr double height = 420.0;
    constexpr double left = 70.0;
    constexpr double right = 150.0;
    constexpr double top = 20.0;
    constexpr double bottom = 55.0;
    constexpr int ticks = 5;

    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -xmin;
    double ymin = xmin;
    double ymax = -xmin;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    if (ymax == ymin) {
        ymax += 0.5;
        ymin -= 0.5;
    }
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;
    auto sx = [&](double x) { return left + (x - xmin) / (xmax - xmin) * plot_w; };
    auto sy = [&](double y) { return top + (ymax - y) / (ymax - ymin) * plot_h; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

    // axes
    svg << "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n"
        << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w << "\" y2=\""
        << top + plot_h << "\"/>\n"
        << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + plot_h
        << "\"/>\n";
    for (int i = 0; i <= ticks; ++i) {
        const double fx = sx(xmin + (xmax - xmin) * i / ticks);
        const double fy = sy(ymin + (ymax - ymin) * i / ticks);
        svg << "<line x1=\"" << fixed(fx, 2) << "\" y1=\"" << top + plot_h << "\" x2=\"" << fixed(fx, 2)
            << "\" y2=\"" << top + plot_h + 5 << "\"/>\n"
            << "<line x1=\"" << left - 5 << "\" y1=\"" << fixed(fy, 2) << "\" x2=\"" << left << "\" y2=\""
            << fixed(fy, 2) << "\"/>\n";
    }
    svg << "</g>\n";

    svg << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
    for (int i = 0; i <= ticks; ++i) {
        const double vx = xmin + (xmax - xmin) * i / ticks;
        const double vy = ymin + (ymax - ymin) * i / ticks;
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3g", vx == 0.0 ? 0.0 : vx);
        svg << "<text x=\"" << fixed(sx(vx), 2) << "\" y=\"" << top + plot_h + 18
            << "\" text-anchor=\"middle\">" << buf << "</text>\n";
        std::snprintf(buf, sizeof buf, "%.3g", vy == 0.0 ? 0.0 : vy);
        svg << "<text x=\"" << left - 8 << "\" y=\"" << fixed(sy(vy) + 4, 2) << "\" text-anchor=\"end\">" << buf
            << "</text>\n";
    }
    svg << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 12 << "\" text-anchor=\"middle\">"
        << xml_escape(labels.x) << "</text>\n"
        << "<text x=\"18\" y=\"" << top + plot_h / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << top + plot_h / 2 << ")\">" << xml_escape(labels.y) << "</text>\n"
        << "</g>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const char* colour = kPalette[k % kPalette.size()];
        svg << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (const auto& [x, y] : series[k].points) {
            if (!first) svg << ' ';
            svg << fixed(sx(x), 3) << ',' << fixed(sy(y), 3);
            first = false;
        }
        svg << "\"/>\n";
    }

    // legend
    svg << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t k = 0; k < series.size(); ++k) {
        const double y = top + 12 + 18.0 * static_cast<double>(k);
        const double x0 = left + plot_w + 12;
        svg << "<line x1=\"" << x0 << "\" y1=\"" << y - 4 << "\" x2=\"" << x0 + 22 << "\" y2=\"" << y - 4
            << "\" stroke=\"" << kPalette[k % kPalette.size()] << "\" stroke-width=\"2\"/>\n"
            << "<text x=\"" << x0 + 28 << "\" y=\"" << y << "\">" << xml_escape(series[k].label) << "</text>\n";
    }
    svg << "</g>\n</svg>\n";

    return emit(sink, svg.str());
}

}  // namespace adelab
