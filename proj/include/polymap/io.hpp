#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "certify.hpp"
#include "mapper.hpp"

namespace polymap {

namespace detail {

// 17 significant digits round-trip a double exactly; infinities (legal for
// exterior_margin on degenerate numerators) travel as quoted strings, since
// JSON has no literal for them.
inline std::string json_number(double x) {
    if (std::isnan(x)) return "\"nan\"";
    if (std::isinf(x)) return x > 0 ? "\"inf\"" : "\"-inf\"";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string json_pair(Complex z) {
    return "[" + json_number(z.real()) + ", " + json_number(z.imag()) + "]";
}

inline double parsed_number(const nlohmann::json& j, const char* what) {
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
        fail(errc::bad_input, std::string(what) + ": unrecognized numeric string");
    }
    if (!j.is_number()) fail(errc::bad_input, std::string(what) + ": expected a number");
    return j.get<double>();
}

inline double parsed_finite(const nlohmann::json& j, const char* what) {
    if (!j.is_number()) fail(errc::bad_input, std::string(what) + ": expected a number");
    double x = j.get<double>();
    if (!std::isfinite(x)) fail(errc::bad_input, std::string(what) + ": non-finite value");
    return x;
}

inline Complex parsed_point(const nlohmann::json& j, const char* what) {
    if (!j.is_array() || j.size() != 2) fail(errc::bad_input, std::string(what) + ": expected [x, y]");
    return {parsed_finite(j[0], what), parsed_finite(j[1], what)};
}

inline nlohmann::json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::bad_input, "cannot open " + path);
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded()) fail(errc::bad_input, "malformed JSON in " + path);
    return j;
}

}  // namespace detail

inline std::string polygon_json(const std::vector<Complex>& vertices) {
    std::ostringstream out;
    out << "{\n  \"vertices\": [\n";
    for (std::size_t k = 0; k < vertices.size(); ++k)
        out << "    " << detail::json_pair(vertices[k]) << (k + 1 < vertices.size() ? ",\n" : "\n");
    out << "  ]\n}\n";
    return out.str();
}

inline std::vector<Complex> read_polygon_file(const std::string& path) {
    nlohmann::json j = detail::parse_file(path);
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        fail(errc::bad_input, "polygon file needs a \"vertices\" array");
    std::vector<Complex> v;
    for (const auto& p : j["vertices"]) v.push_back(detail::parsed_point(p, "vertex"));
    return v;
}

inline std::string verification_json(const VerificationReport& r, const std::string& indent = "") {
    std::ostringstream out;
    out << "{\n";
    out << indent << "  \"zero_margin\": " << detail::json_number(r.zero_margin) << ",\n";
    out << indent << "  \"winding_ok\": " << (r.winding_ok ? "true" : "false") << ",\n";
    out << indent << "  \"winding_radius\": " << detail::json_number(r.winding_radius) << ",\n";
    out << indent << "  \"jacobian_min\": " << detail::json_number(r.jacobian_min) << ",\n";
    out << indent << "  \"collision_free\": " << (r.collision_free ? "true" : "false") << ",\n";
    out << indent << "  \"boundary_trace_deviation\": " << detail::json_number(r.boundary_trace_deviation)
        << ",\n";
    out << indent << "  \"pass\": " << (r.pass ? "true" : "false") << "\n";
    out << indent << "}";
    return out.str();
}

inline std::string certificate_json(const Certificate& cert) {
    const std::vector<Complex>& v = cert.step_map.polygon().vertices();
    const std::vector<double>& t = cert.step_map.partition().angles();
    std::ostringstream out;
    out << "{\n  \"vertices\": [\n";
    for (std::size_t k = 0; k < v.size(); ++k)
        out << "    " << detail::json_pair(v[k]) << (k + 1 < v.size() ? ",\n" : "\n");
    out << "  ],\n  \"angles\": [\n";
    for (std::size_t k = 0; k < t.size(); ++k)
        out << "    " << detail::json_number(t[k]) << (k + 1 < t.size() ? ",\n" : "\n");
    out << "  ],\n  \"roots\": [\n";
    for (std::size_t k = 0; k < cert.roots.roots.size(); ++k)
        out << "    " << detail::json_pair(cert.roots.roots[k])
            << (k + 1 < cert.roots.roots.size() ? ",\n" : "\n");
    out << "  ],\n  \"root_error_radii\": [\n";
    for (std::size_t k = 0; k < cert.roots.error_radius.size(); ++k)
        out << "    " << detail::json_number(cert.roots.error_radius[k])
            << (k + 1 < cert.roots.error_radius.size() ? ",\n" : "\n");
    out << "  ],\n  \"exterior_margin\": " << detail::json_number(cert.exterior_margin) << ",\n";
    out << "  \"ear_trace\": [\n";
    for (std::size_t k = 0; k < cert.ear_trace.size(); ++k) {
        const EarStep& s = cert.ear_trace[k];
        out << "    {\"ear_index\": " << s.ear_index << ", \"epsilon\": "
            << detail::json_number(s.epsilon) << ", \"w0\": " << detail::json_pair(s.w0) << "}"
            << (k + 1 < cert.ear_trace.size() ? ",\n" : "\n");
    }
    out << "  ],\n  \"verification\": " << verification_json(cert.checks, "  ") << "\n}\n";
    return out.str();
}

// Certificate as stored on disk; enough to rebuild the StepMap and re-run
// every check without the construction history.
struct CertificateFile {
    std::vector<Complex> vertices;
    std::vector<double> angles;
    std::vector<Complex> roots;
    std::vector<double> root_error_radii;
    double exterior_margin = 0.0;
    std::vector<EarStep> ear_trace;
    VerificationReport verification;
};

inline CertificateFile read_certificate_file(const std::string& path) {
    nlohmann::json j = detail::parse_file(path);
    for (const char* key : {"vertices", "angles", "roots", "root_error_radii", "ear_trace"})
        if (!j.is_object() || !j.contains(key) || !j[key].is_array())
            fail(errc::bad_input, std::string("certificate file needs a \"") + key + "\" array");
    CertificateFile c;
    for (const auto& p : j["vertices"]) c.vertices.push_back(detail::parsed_point(p, "vertex"));
    for (const auto& a : j["angles"]) c.angles.push_back(detail::parsed_finite(a, "angle"));
    for (const auto& p : j["roots"]) c.roots.push_back(detail::parsed_point(p, "root"));
    for (const auto& r : j["root_error_radii"])
        c.root_error_radii.push_back(detail::parsed_number(r, "error radius"));
    if (!j.contains("exterior_margin")) fail(errc::bad_input, "certificate lacks exterior_margin");
    c.exterior_margin = detail::parsed_number(j["exterior_margin"], "exterior_margin");
    for (const auto& e : j["ear_trace"]) {
        if (!e.is_object() || !e.contains("ear_index") || !e.contains("epsilon") || !e.contains("w0"))
            fail(errc::bad_input, "ear_trace entry needs ear_index, epsilon, w0");
        EarStep s;
        s.ear_index = e["ear_index"].get<std::size_t>();
        s.epsilon = detail::parsed_finite(e["epsilon"], "epsilon");
        s.w0 = detail::parsed_point(e["w0"], "w0");
        s.relabel_offset = 0;
        c.ear_trace.push_back(s);
    }
    if (j.contains("verification") && j["verification"].is_object()) {
        const auto& r = j["verification"];
        VerificationReport& rep = c.verification;
        if (r.contains("zero_margin")) rep.zero_margin = detail::parsed_number(r["zero_margin"], "zero_margin");
        if (r.contains("winding_ok")) rep.winding_ok = r["winding_ok"].get<bool>();
        if (r.contains("winding_radius"))
            rep.winding_radius = detail::parsed_number(r["winding_radius"], "winding_radius");
        if (r.contains("jacobian_min"))
            rep.jacobian_min = detail::parsed_number(r["jacobian_min"], "jacobian_min");
        if (r.contains("collision_free")) rep.collision_free = r["collision_free"].get<bool>();
        if (r.contains("boundary_trace_deviation"))
            rep.boundary_trace_deviation =
                detail::parsed_number(r["boundary_trace_deviation"], "boundary_trace_deviation");
        if (r.contains("pass")) rep.pass = r["pass"].get<bool>();
    }
    return c;
}

inline StepMap step_map_from(const CertificateFile& c) {
    return StepMap(normalize(c.vertices), Partition(c.angles));
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::bad_input, "cannot write " + path);
    out << text;
}

}  // namespace polymap
