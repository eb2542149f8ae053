#pragma once

#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "asymptotics.hpp"
#include "io.hpp"
#include "svg.hpp"

namespace polymap {

// Exit-code contract: 0 success/certified, 2 not certified or verification
// failed, 3 invalid input.  Scripts can tell "the math said no" from "the
// file was garbage".
constexpr int exit_ok = 0;
constexpr int exit_not_certified = 2;
constexpr int exit_bad_input = 3;

namespace detail {

inline bool vertices_match(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (std::abs(a[k] - b[k]) > 1e-12) return false;
    return true;
}

}  // namespace detail

inline int cmd_solve(const std::string& input, const std::string& out_path,
                     const std::string& svg_path, const SolveOptions& opts, std::ostream& out) {
    std::optional<Polygon> p;
    try {
        p = normalize(read_polygon_file(input));
    } catch (const error& e) {
        out << "invalid input: " << e.what() << "\n";
        return exit_bad_input;
    }
    std::optional<Certificate> cert;
    try {
        cert = solve(*p, opts);
    } catch (const error& e) {
        out << "not certified: " << e.what() << "\n";
        return exit_not_certified;
    }
    out << "exterior margin " << detail::json_number(cert->exterior_margin) << "\n";
    for (std::size_t k = 0; k < cert->ear_trace.size(); ++k) {
        const EarStep& s = cert->ear_trace[k];
        out << "ear " << k << ": index " << s.ear_index << " epsilon "
            << detail::json_number(s.epsilon) << " w0 " << detail::json_pair(s.w0) << "\n";
    }
    try {
        if (!out_path.empty()) write_text_file(out_path, certificate_json(*cert));
        if (!svg_path.empty()) write_text_file(svg_path, render_svg(cert->step_map, 8, 16));
    } catch (const error& e) {
        out << "invalid input: " << e.what() << "\n";
        return exit_bad_input;
    }
    return exit_ok;
}

inline int cmd_verify(const std::string& polygon_path, const std::string& cert_path,
                      const VerifyOptions& opts, std::ostream& out) {
    std::optional<StepMap> m;
    try {
        Polygon p = normalize(read_polygon_file(polygon_path));
        CertificateFile c = read_certificate_file(cert_path);
        if (!detail::vertices_match(p.vertices(), c.vertices)) {
            out << "invalid input: polygon and certificate vertex lists disagree\n";
            return exit_bad_input;
        }
        m = step_map_from(c);
    } catch (const error& e) {
        out << "invalid input: " << e.what() << "\n";
        return exit_bad_input;
    }
    try {
        VerificationReport rep = verify(*m, opts);
        out << verification_json(rep) << "\n";
        return rep.pass ? exit_ok : exit_not_certified;
    } catch (const error& e) {
        out << "verification error: " << e.what() << "\n";
        return exit_not_certified;
    }
}

inline int cmd_ears(const std::string& polygon_path, std::ostream& out) {
    try {
        Polygon p = normalize(read_polygon_file(polygon_path));
        std::vector<EarReport> ears = find_ears(p);
        out << "{\n  \"ears\": [\n";
        for (std::size_t k = 0; k < ears.size(); ++k)
            out << "    {\"index\": " << ears[k].index << ", \"robustness\": "
                << detail::json_number(ears[k].robustness) << "}"
                << (k + 1 < ears.size() ? ",\n" : "\n");
        out << "  ]\n}\n";
        return exit_ok;
    } catch (const error& e) {
        out << "invalid input: " << e.what() << "\n";
        return exit_bad_input;
    }
}

inline int cmd_render(const std::string& polygon_path, const std::string& cert_path,
                      std::size_t circles, std::size_t rays, const std::string& svg_path,
                      std::ostream& out) {
    try {
        Polygon p = normalize(read_polygon_file(polygon_path));
        CertificateFile c = read_certificate_file(cert_path);
        if (!detail::vertices_match(p.vertices(), c.vertices)) {
            out << "invalid input: polygon and certificate vertex lists disagree\n";
            return exit_bad_input;
        }
        std::string svg = render_svg(step_map_from(c), circles, rays);
        if (svg_path.empty())
            out << svg;
        else
            write_text_file(svg_path, svg);
        return exit_ok;
    } catch (const error& e) {
        out << "invalid input: " << e.what() << "\n";
        return exit_bad_input;
    }
}

inline int cmd_los_table(double A, double B, const std::vector<double>& angles,
                         const std::vector<double>& ys, std::ostream& out) {
    if (!(A > 0.0) || !(B > 0.0)) {
        out << "invalid input: interval lengths must be positive\n";
        return exit_bad_input;
    }
    for (double y : ys)
        if (!(y > 0.0)) {
            out << "invalid input: y must be positive\n";
            return exit_bad_input;
        }
    for (double a : angles)
        if (!(a > 0.0) || !(a < pi)) {
            out << "invalid input: approach angle must lie in (0, pi)\n";
            return exit_bad_input;
        }
    const double limit = los_limit(A, B);
    out << "angle,y,omega_over_y,limit,abs_error\n";
    char buf[160];
    for (double a : angles)
        for (double y : ys) {
            double emp = los_empirical(A, B, a, y);
            std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g,%.12g\n", a, y, emp, limit,
                          std::abs(emp - limit));
            out << buf;
        }
    return exit_ok;
}

}  // namespace polymap
