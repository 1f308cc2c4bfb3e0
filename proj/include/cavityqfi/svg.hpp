// svg.hpp — Minimal self-contained SVG line plots of trajectory columns

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "cavityqfi/io.hpp"

namespace cavityqfi::svg {

namespace detail {

inline std::string num(double v, const char* fmt = "%.2f") {
    char buf[40];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return std::string(buf);
}

/// Round the tick spacing to 1, 2 or 5 times a power of ten.
inline double nice_step(double span, int target_ticks) {
    const double raw = span / target_ticks;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double r = raw / mag;
    if (r < 1.5)
        return mag;
    if (r < 3.5)
        return 2.0 * mag;
    if (r < 7.5)
        return 5.0 * mag;
    return 10.0 * mag;
}

} // namespace detail

/// Renders the selected columns against the first column (gamma0_t) as
/// polylines with linear axes and tick labels. Output is a single
/// self-contained document and is byte-deterministic for identical inputs.
/// NaN samples split the polyline. Requires >= 2 rows and >= 1 known column.
inline std::string render_svg(const io::Table& table, const std::vector<std::string>& columns) {
    if (table.rows.size() < 2)
        throw std::invalid_argument("render_svg: need at least 2 rows");
    if (columns.empty())
        throw std::invalid_argument("render_svg: no columns selected");
    if (table.columns.empty())
        throw std::invalid_argument("render_svg: table has no columns");

    std::vector<std::size_t> idx;
    idx.reserve(columns.size());
    for (const auto& name : columns)
        idx.push_back(table.column_index(name)); // throws on unknown names

    const double width = 880.0, height = 520.0;
    const double ml = 72.0, mr = 16.0, mt = 18.0, mb = 48.0;
    const double pw = width - ml - mr, ph = height - mt - mb;

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& row : table.rows) {
        xmin = std::min(xmin, row[0]);
        xmax = std::max(xmax, row[0]);
        for (std::size_t k : idx) {
            if (std::isnan(row[k]))
                continue;
            ymin = std::min(ymin, row[k]);
            ymax = std::max(ymax, row[k]);
        }
    }
    if (!std::isfinite(ymin)) { // all-NaN selection still renders axes
        ymin = 0.0;
        ymax = 1.0;
    }
    if (xmax == xmin)
        xmax = xmin + 1.0;
    if (ymax == ymin) {
        ymin -= 0.5;
        ymax += 0.5;
    }
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    auto sx = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    auto sy = [&](double y) { return mt + (ymax - y) / (ymax - ymin) * ph; };

    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf"};
    const std::size_t n_colors = sizeof(palette) / sizeof(palette[0]);

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::num(width, "%.0f") +
           "\" height=\"" + detail::num(height, "%.0f") + "\" viewBox=\"0 0 " +
           detail::num(width, "%.0f") + " " + detail::num(height, "%.0f") + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes
    out += "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
    out += "<path d=\"M " + detail::num(ml) + " " + detail::num(mt) + " L " + detail::num(ml) +
           " " + detail::num(mt + ph) + " L " + detail::num(ml + pw) + " " + detail::num(mt + ph) +
           "\"/>\n";
    out += "</g>\n";

    // ticks and labels
    out += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
    const double xstep = detail::nice_step(xmax - xmin, 6);
    for (double x = std::ceil(xmin / xstep) * xstep; x <= xmax + 1e-12 * xstep; x += xstep) {
        const double px = sx(x);
        out += "<line x1=\"" + detail::num(px) + "\" y1=\"" + detail::num(mt + ph) + "\" x2=\"" +
               detail::num(px) + "\" y2=\"" + detail::num(mt + ph + 5) +
               "\" stroke=\"black\"/>\n";
        out += "<text x=\"" + detail::num(px) + "\" y=\"" + detail::num(mt + ph + 20) +
               "\" text-anchor=\"middle\">" + detail::num(x, "%g") + "</text>\n";
    }
    const double ystep = detail::nice_step(ymax - ymin, 6);
    for (double y = std::ceil(ymin / ystep) * ystep; y <= ymax + 1e-12 * ystep; y += ystep) {
        const double py = sy(y);
        out += "<line x1=\"" + detail::num(ml - 5) + "\" y1=\"" + detail::num(py) + "\" x2=\"" +
               detail::num(ml) + "\" y2=\"" + detail::num(py) + "\" stroke=\"black\"/>\n";
        out += "<text x=\"" + detail::num(ml - 9) + "\" y=\"" + detail::num(py + 4) +
               "\" text-anchor=\"end\">" + detail::num(y, "%g") + "</text>\n";
    }
    out += "<text x=\"" + detail::num(ml + pw / 2) + "\" y=\"" + detail::num(height - 8) +
           "\" text-anchor=\"middle\">gamma0_t</text>\n";
    out += "</g>\n";

    // series
    for (std::size_t s = 0; s < idx.size(); ++s) {
        const char* color = palette[s % n_colors];
        std::string points;
        auto flush = [&]() {
            if (!points.empty()) {
                out += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
                       "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
                points.clear();
            }
        };
        for (const auto& row : table.rows) {
            const double y = row[idx[s]];
            if (std::isnan(y)) {
                flush();
                continue;
            }
            if (!points.empty())
                points += ' ';
            points += detail::num(sx(row[0])) + "," + detail::num(sy(y));
        }
        flush();
        // legend entry
        const double ly = mt + 16.0 + 18.0 * static_cast<double>(s);
        out += "<line x1=\"" + detail::num(ml + pw - 150) + "\" y1=\"" + detail::num(ly) +
               "\" x2=\"" + detail::num(ml + pw - 126) + "\" y2=\"" + detail::num(ly) +
               "\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
        out += "<text font-family=\"sans-serif\" font-size=\"12\" x=\"" +
               detail::num(ml + pw - 120) + "\" y=\"" + detail::num(ly + 4) + "\">" +
               columns[s] + "</text>\n";
    }

    out += "</svg>\n";
    return out;
}

} // namespace cavityqfi::svg
