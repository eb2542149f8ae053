#pragma once

// Jordan polygons with validated invariants.
//
// A Polygon can only be obtained through normalize() (or clip_ear(), which
// re-validates), so every instance downstream is a simple, counterclockwise,
// duplicate-free vertex cycle with no three consecutive vertices collinear.
// Validation fails loudly rather than repairing input: near-degenerate data
// silently "fixed" here would surface later as an uncertifiable map.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "predicates.hpp"

namespace polymap {

using Complex = std::complex<double>;

namespace detail {

inline int orient(const Complex& a, const Complex& b, const Complex& c) {
    return orient2d(a.real(), a.imag(), b.real(), b.imag(), c.real(), c.imag());
}

// Shoelace sum with compensated accumulation; only used for orientation and
// area bookkeeping, never for validity decisions.
inline double shoelace(const std::vector<Complex>& v) {
    double sum = 0.0, comp = 0.0;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Complex& a = v[i];
        const Complex& b = v[(i + 1) % n];
        double term = a.real() * b.imag() - b.real() * a.imag();
        double t = sum + term;
        if (std::fabs(sum) >= std::fabs(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;
    }
    return 0.5 * (sum + comp);
}

inline bool on_segment_bbox(const Complex& p, const Complex& a, const Complex& b) {
    return std::min(a.real(), b.real()) <= p.real() && p.real() <= std::max(a.real(), b.real()) &&
           std::min(a.imag(), b.imag()) <= p.imag() && p.imag() <= std::max(a.imag(), b.imag());
}

// Do closed segments [a,b] and [c,d] share any point?  Exact.
inline bool segments_intersect(const Complex& a, const Complex& b,
                               const Complex& c, const Complex& d) {
    int d1 = orient(c, d, a);
    int d2 = orient(c, d, b);
    int d3 = orient(a, b, c);
    int d4 = orient(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && on_segment_bbox(a, c, d)) return true;
    if (d2 == 0 && on_segment_bbox(b, c, d)) return true;
    if (d3 == 0 && on_segment_bbox(c, a, b)) return true;
    if (d4 == 0 && on_segment_bbox(d, a, b)) return true;
    return false;
}

// Closed triangle (a,b,c) given counterclockwise.
inline bool point_in_closed_triangle(const Complex& p, const Complex& a,
                                     const Complex& b, const Complex& c) {
    return orient(a, b, p) >= 0 && orient(b, c, p) >= 0 && orient(c, a, p) >= 0;
}

inline double point_segment_distance(const Complex& p, const Complex& a, const Complex& b) {
    Complex ab = b - a;
    double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) / len2;
    t = std::max(0.0, std::min(1.0, t));
    return std::abs(p - (a + t * ab));
}

inline void validate_jordan(const std::vector<Complex>& v) {
    const std::size_t n = v.size();
    if (n < 3) fail(errc::too_few_vertices, "need at least 3 vertices, got " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (v[i].real() == v[j].real() && v[i].imag() == v[j].imag())
                fail(errc::duplicate_vertex,
                     "vertices " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
    for (std::size_t i = 0; i < n; ++i)
        if (orient(v[(i + n - 1) % n], v[i], v[(i + 1) % n]) == 0)
            fail(errc::collinear_triple,
                 "vertices " + std::to_string((i + n - 1) % n) + "," + std::to_string(i) + "," +
                     std::to_string((i + 1) % n) + " are collinear");
    // Non-adjacent edges may not touch at all; adjacent ones only share the
    // common endpoint (guaranteed by the collinear-triple rejection above).
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j == i + 1 || (i == 0 && j == n - 1)) continue;
            if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]))
                fail(errc::self_intersecting,
                     "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
        }
    }
}

}  // namespace detail

class Polygon {
  public:
    std::size_t size() const { return v_.size(); }
    const std::vector<Complex>& vertices() const { return v_; }
    const Complex& operator[](std::size_t i) const { return v_[i]; }

    friend Polygon normalize(std::vector<Complex> raw);

  private:
    explicit Polygon(std::vector<Complex> v) : v_(std::move(v)) {}
    std::vector<Complex> v_;
};

// Validate a raw vertex cycle and orient it counterclockwise.
inline Polygon normalize(std::vector<Complex> raw) {
    detail::validate_jordan(raw);
    double area = detail::shoelace(raw);
    if (area == 0.0) fail(errc::invalid_polygon, "polygon has zero area");
    if (area < 0.0) std::reverse(raw.begin(), raw.end());
    return Polygon(std::move(raw));
}

inline double signed_area(const Polygon& p) { return detail::shoelace(p.vertices()); }

struct EarReport {
    std::size_t index;
    double robustness;  // distance from the closed ear triangle to the other vertices
};

// An ear: a strictly convex vertex whose closed triangle (prev, v, next)
// contains no other vertex.  For a simple polygon this is equivalent to
// "removing the vertex leaves a Jordan polygon whose region is the old one
// minus the triangle": any edge invading the triangle would have to cross
// one of the two incident edges (impossible, the polygon is simple) or the
// diagonal with an endpoint inside the closed triangle.
inline bool is_ear(const Polygon& p, std::size_t i) {
    const std::size_t n = p.size();
    if (i >= n) fail(errc::index_range, "vertex index " + std::to_string(i) + " out of range");
    const Complex& prev = p[(i + n - 1) % n];
    const Complex& cur = p[i];
    const Complex& next = p[(i + 1) % n];
    if (detail::orient(prev, cur, next) <= 0) return false;
    for (std::size_t j = 0; j < n; ++j) {
        if (j == i || j == (i + n - 1) % n || j == (i + 1) % n) continue;
        if (detail::point_in_closed_triangle(p[j], prev, cur, next)) return false;
    }
    return true;
}

// All ears with their robustness scores.  Every Jordan polygon has at least
// two; fewer indicates a predicate bug, not bad input.
inline std::vector<EarReport> find_ears(const Polygon& p) {
    const std::size_t n = p.size();
    std::vector<EarReport> ears;
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_ear(p, i)) continue;
        const Complex& prev = p[(i + n - 1) % n];
        const Complex& cur = p[i];
        const Complex& next = p[(i + 1) % n];
        double rob = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || j == (i + n - 1) % n || j == (i + 1) % n) continue;
            double d = std::min({detail::point_segment_distance(p[j], prev, cur),
                                 detail::point_segment_distance(p[j], cur, next),
                                 detail::point_segment_distance(p[j], next, prev)});
            rob = std::min(rob, d);
        }
        ears.push_back({i, rob});
    }
    if (ears.size() < 2)
        fail(errc::no_two_ears, "found " + std::to_string(ears.size()) +
                                    " ears on a polygon with " + std::to_string(n) + " vertices");
    return ears;
}

// Remove an ear vertex; the result is re-validated in full (the removal can
// make the new neighbor triple collinear, which is an error, not a repair).
inline Polygon clip_ear(const Polygon& p, std::size_t i) {
    const std::size_t n = p.size();
    if (i >= n) fail(errc::index_range, "vertex index " + std::to_string(i) + " out of range");
    if (n < 4 || !is_ear(p, i))
        fail(errc::not_an_ear, "vertex " + std::to_string(i) + " is not a clippable ear");
    std::vector<Complex> rest;
    rest.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j)
        if (j != i) rest.push_back(p[j]);
    return normalize(std::move(rest));
}

}  // namespace polymap
