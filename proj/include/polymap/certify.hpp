#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

#include "polymap/error.hpp"
#include "polymap/poisson.hpp"
#include "polymap/pole_sum.hpp"
#include "polymap/polygon.hpp"

namespace polymap {

struct VerifyOptions {
    std::size_t boundary_samples = 8192;  // closed-curve resolution for winding numbers
    std::size_t jacobian_radii = 64;
    std::size_t jacobian_angles = 256;
    std::size_t collision_radii = 24;
    std::size_t collision_angles = 48;
    std::size_t probe_points = 16;         // interior points tested for winding number 1
    double rim = 1.0 - 1e-4;               // radius standing in for the unit circle
    double winding_tol = 1e-3;             // slack before rounding to an integer
    double collision_tol_scale = 1e-6;     // image-collision threshold, times diameter
    double separation_tol = 0.05;          // preimage distance that counts as "distinct"
    double collision_rim = 0.97;           // radial extent of the collision grid; nearer the
                                           // circle, corner compression squeezes honest separated
                                           // pairs below any fixed tolerance
};

struct VerificationReport {
    double zero_margin = -std::numeric_limits<double>::infinity();
    bool winding_ok = false;
    double winding_radius = 0.0;
    double jacobian_min = -std::numeric_limits<double>::infinity();
    bool collision_free = false;
    double boundary_trace_deviation = std::numeric_limits<double>::infinity();
    bool pass = false;
};

namespace detail {

// Interior probe points: centroids of successive ear triangles.  Each ear
// triangle lies inside the polygon, so its centroid does too.
inline std::vector<Complex> interior_probes(const Polygon& p, std::size_t want) {
    std::vector<Complex> probes;
    Polygon work = p;
    while (work.size() > 3 && probes.size() + 1 < want) {
        std::vector<EarReport> ears;
        try {
            ears = find_ears(work);
        } catch (const error&) {
            break;
        }
        std::size_t best = ears.front().index;
        double rob = ears.front().robustness;
        for (const EarReport& e : ears)
            if (e.robustness > rob) best = e.index, rob = e.robustness;
        const std::size_t n = work.size();
        probes.push_back((work[(best + n - 1) % n] + work[best] + work[(best + 1) % n]) / 3.0);
        try {
            work = clip_ear(work, best);
        } catch (const error&) {
            break;
        }
    }
    if (work.size() == 3 && probes.size() < want)
        probes.push_back((work[0] + work[1] + work[2]) / 3.0);
    return probes;
}

// Upper bound on |d f(r e^{i t})/dt| anywhere within `width` of the domain
// point z: both |h'| and |g'| are bounded termwise by
// sum_k |alpha_k| / (|z - zeta_k| - width).  Infinite when a pole sits that
// close, which simply forces another bisection.
inline double sweep_rate_bound(const PoleSum& hp, Complex z, double width) {
    double s = 0.0;
    for (std::size_t k = 0; k < hp.size(); ++k) {
        double d = std::abs(z - hp.poles()[k]) - width;
        if (d <= 0.0) return std::numeric_limits<double>::infinity();
        s += std::abs(hp.residues()[k]) / d;
    }
    return 2.0 * s;
}

// Signed argument swept by f(r_w e^{i t}) - probe over [ta, tb].  An interval
// is accepted only when the sweep-rate bound confines its whole image to a
// disk around one endpoint that excludes the probe; then the sweep equals the
// principal increment.  Anything weaker misses real excursions: the image of
// a very short boundary arc can leave, loop around the probe, and come back
// between two base samples, with both a small chord and a small principal
// increment to show for it.  A curve point collapsing onto the probe yields
// NaN, which fails the check upstream.
inline double winding_increment(const StepMap& m, const PoleSum& hp, Complex probe, double rw,
                                double ta, Complex fa, double tb, Complex fb, int depth) {
    Complex a = fa - probe, b = fb - probe;
    double da = std::abs(a), db = std::abs(b);
    if (da < 1e-300 || db < 1e-300) return std::numeric_limits<double>::quiet_NaN();
    if (depth <= 0) return std::arg(b / a);
    double w = tb - ta;
    if (w * sweep_rate_bound(hp, std::polar(rw, ta), w) <= 0.5 * std::min(da, db))
        return std::arg(b / a);
    double tm = 0.5 * (ta + tb);
    Complex fm = evaluate_map(m, std::polar(rw, tm));
    return winding_increment(m, hp, probe, rw, ta, fa, tm, fm, depth - 1) +
           winding_increment(m, hp, probe, rw, tm, fm, tb, fb, depth - 1);
}

inline double polygon_diameter(const Polygon& p) {
    double diam = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            diam = std::max(diam, std::abs(p[i] - p[j]));
    return diam;
}

}  // namespace detail

// Independent univalence check: fresh root certification, winding number 1
// of the near-boundary image curve about interior probes, Jacobian positivity
// on a polar grid, and an image-collision scan.  A failed check is an
// outcome, not an error; only the root finder itself can throw.
inline VerificationReport verify(const StepMap& m, const VerifyOptions& opts = {}) {
    VerificationReport rep;
    const PoleSum hp = from_step_map(m);
    const PoleSum gp = conjugate_residues(hp);

    CertifiedRoots cr = find_roots(hp);
    rep.zero_margin = cr.exterior_margin;

    // Image of the circle |z| = r_w, reused by the winding and trace checks.
    // The default rim works whenever the winding circle can resolve every
    // boundary arc; a certificate with arcs below ~256(1 - rim) pushes r_w
    // closer to 1, since from farther away the curve provably cuts the
    // corner at that vertex (its arc carries too little harmonic measure)
    // and the image can miss a sliver of the polygon around it.
    double min_arc = two_pi;
    for (std::size_t k = 0; k < m.partition().arcs(); ++k)
        min_arc = std::min(min_arc, m.partition().arc_length(k));
    const double rw = std::min(1.0 - 1e-13, std::max(opts.rim, 1.0 - min_arc / 256.0));
    rep.winding_radius = rw;
    const std::size_t S = std::max<std::size_t>(opts.boundary_samples, 16);
    std::vector<Complex> curve(S);
    std::vector<double> theta(S);
    for (std::size_t j = 0; j < S; ++j) {
        theta[j] = two_pi * static_cast<double>(j) / static_cast<double>(S);
        curve[j] = evaluate_map(m, std::polar(rw, theta[j]));
    }

    // Trace deviation sampled on the uniform grid plus targeted angles: each
    // jump crossing happens within O(1 - r_w) of its vertex angle, far below
    // the grid spacing, and the deepest excursions (corner cuts at short
    // arcs) live exactly there and at arc midpoints.
    std::vector<double> trace_angles(theta);
    for (std::size_t k = 0; k < m.partition().arcs(); ++k) {
        const double tk = m.partition()[k];
        trace_angles.push_back(tk + 0.5 * m.partition().arc_length(k));
        for (double c : {1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0}) {
            trace_angles.push_back(tk + c * (1.0 - rw));
            trace_angles.push_back(tk - c * (1.0 - rw));
        }
    }
    rep.boundary_trace_deviation = 0.0;
    const std::vector<Complex>& v = m.polygon().vertices();
    for (double t : trace_angles) {
        const Complex w = evaluate_map(m, std::polar(rw, t));
        double dist = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < v.size(); ++k)
            dist = std::min(dist, detail::point_segment_distance(w, v[k], v[(k + 1) % v.size()]));
        rep.boundary_trace_deviation = std::max(rep.boundary_trace_deviation, dist);
    }

    // A probe from a sliver ear can sit closer to the polygon boundary than
    // the curve's own excursion, and then winding 0 is the true answer even
    // for a univalent map: the point falls outside the slightly shrunken
    // image of the r_w disk.  Test only probes that clear the measured
    // excursion with room to spare, keeping at least the deepest one.
    std::vector<Complex> probes = detail::interior_probes(m.polygon(), opts.probe_points);
    {
        std::vector<double> clearance(probes.size());
        std::size_t deepest = 0;
        for (std::size_t i = 0; i < probes.size(); ++i) {
            double dist = std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k < v.size(); ++k)
                dist = std::min(dist, detail::point_segment_distance(probes[i], v[k], v[(k + 1) % v.size()]));
            clearance[i] = dist;
            if (dist > clearance[deepest]) deepest = i;
        }
        std::vector<Complex> kept;
        for (std::size_t i = 0; i < probes.size(); ++i)
            if (i == deepest || clearance[i] > 4.0 * rep.boundary_trace_deviation)
                kept.push_back(probes[i]);
        probes = std::move(kept);
    }

    rep.winding_ok = true;
    for (const Complex& probe : probes) {
        double total = 0.0;
        for (std::size_t j = 0; j < S; ++j) {
            std::size_t jn = (j + 1) % S;
            total += detail::winding_increment(m, hp, probe, rw, theta[j], curve[j],
                                               theta[j] + two_pi / static_cast<double>(S), curve[jn], 60);
        }
        if (!(std::abs(total / two_pi - 1.0) <= opts.winding_tol)) rep.winding_ok = false;
    }

    rep.jacobian_min = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < opts.jacobian_radii; ++i) {
        double r = opts.rim * static_cast<double>(i + 1) / static_cast<double>(opts.jacobian_radii);
        for (std::size_t j = 0; j < opts.jacobian_angles; ++j) {
            Complex z = std::polar(r, two_pi * static_cast<double>(j) / static_cast<double>(opts.jacobian_angles));
            double jac = std::norm(evaluate(hp, z)) - std::norm(evaluate(gp, z));
            rep.jacobian_min = std::min(rep.jacobian_min, jac);
        }
    }

    const double collision_tol = opts.collision_tol_scale * detail::polygon_diameter(m.polygon());
    std::vector<Complex> pts, img;
    for (std::size_t i = 0; i < opts.collision_radii; ++i) {
        double r = opts.collision_rim * static_cast<double>(i + 1) / static_cast<double>(opts.collision_radii);
        for (std::size_t j = 0; j < opts.collision_angles; ++j) {
            Complex z = std::polar(r, two_pi * static_cast<double>(j) / static_cast<double>(opts.collision_angles));
            pts.push_back(z);
            img.push_back(evaluate_map(m, z));
        }
    }
    rep.collision_free = true;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (std::abs(img[i] - img[j]) < collision_tol && std::abs(pts[i] - pts[j]) > opts.separation_tol)
                rep.collision_free = false;

    rep.pass = rep.zero_margin > 0.0 && rep.winding_ok && rep.jacobian_min > 0.0 && rep.collision_free;
    return rep;
}

}  // namespace polymap
