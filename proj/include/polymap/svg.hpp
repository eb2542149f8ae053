#pragma once

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>

#include "poisson.hpp"

namespace polymap {

namespace detail {

inline std::string svg_num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.8g", x);
    return buf;
}

}  // namespace detail

// Deterministic SVG: the target polygon outline, the images of `circles`
// concentric circles and `rays` radial segments under the map (512-sample
// polylines), and vertex labels c_1..c_n.  The y axis is flipped point by
// point so text renders upright.
inline std::string render_svg(const StepMap& m, std::size_t circles, std::size_t rays) {
    const std::vector<Complex>& v = m.polygon().vertices();
    double xmin = v[0].real(), xmax = xmin, ymin = v[0].imag(), ymax = ymin;
    for (const Complex& c : v) {
        xmin = std::min(xmin, c.real()), xmax = std::max(xmax, c.real());
        ymin = std::min(ymin, c.imag()), ymax = std::max(ymax, c.imag());
    }
    const double diag = std::hypot(xmax - xmin, ymax - ymin);
    const double pad = 0.08 * diag;
    const double flip = ymax + ymin;  // y -> flip - y reflects inside the box
    auto px = [](double x) { return x; };
    auto py = [flip](double y) { return flip - y; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
        << detail::svg_num(xmin - pad) << " " << detail::svg_num(ymin - pad) << " "
        << detail::svg_num(xmax - xmin + 2 * pad) << " " << detail::svg_num(ymax - ymin + 2 * pad)
        << "\" width=\"640\" height=\"640\">\n";

    const std::size_t samples = 512;
    const double rmax = 1.0 - 1e-4;
    auto polyline = [&](auto point_at, std::size_t count, const char* color) {
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
            << detail::svg_num(0.003 * diag) << "\" points=\"";
        for (std::size_t j = 0; j < count; ++j) {
            Complex f = point_at(j);
            out << detail::svg_num(px(f.real())) << "," << detail::svg_num(py(f.imag()))
                << (j + 1 < count ? " " : "");
        }
        out << "\"/>\n";
    };

    for (std::size_t i = 0; i < circles; ++i) {
        double r = rmax * static_cast<double>(i + 1) / static_cast<double>(circles + 1);
        polyline(
            [&](std::size_t j) {
                double th = two_pi * static_cast<double>(j % samples) / static_cast<double>(samples);
                return evaluate_map(m, std::polar(r, th));
            },
            samples + 1, "#3366cc");
    }
    for (std::size_t s = 0; s < rays; ++s) {
        double th = two_pi * static_cast<double>(s) / static_cast<double>(rays);
        polyline(
            [&](std::size_t j) {
                double r = rmax * static_cast<double>(j) / static_cast<double>(samples - 1);
                return evaluate_map(m, std::polar(r, th));
            },
            samples, "#cc7733");
    }

    out << "<polygon fill=\"none\" stroke=\"#000000\" stroke-width=\""
        << detail::svg_num(0.006 * diag) << "\" points=\"";
    for (std::size_t k = 0; k < v.size(); ++k)
        out << detail::svg_num(px(v[k].real())) << "," << detail::svg_num(py(v[k].imag()))
            << (k + 1 < v.size() ? " " : "");
    out << "\"/>\n";

    Complex centroid(0.0);
    for (const Complex& c : v) centroid += c;
    centroid /= static_cast<double>(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        Complex dir = v[k] - centroid;
        double len = std::abs(dir);
        Complex at = v[k] + (len > 0 ? dir / len : Complex(1.0)) * (0.03 * diag);
        out << "<text x=\"" << detail::svg_num(px(at.real())) << "\" y=\""
            << detail::svg_num(py(at.imag())) << "\" font-size=\"" << detail::svg_num(0.035 * diag)
            << "\" font-family=\"sans-serif\" text-anchor=\"middle\">c_" << (k + 1) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace polymap
