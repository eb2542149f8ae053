#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polymap/certify.hpp"
#include "polymap/error.hpp"
#include "polymap/partition.hpp"
#include "polymap/poisson.hpp"
#include "polymap/pole_sum.hpp"
#include "polymap/polygon.hpp"

namespace polymap {

struct SolveOptions {
    double min_margin = 1e-9;          // required exterior clearance of the certified roots
    double eps0 = 0.1;                 // starting notch arc length
    int max_halvings = 60;             // notch-width search budget
    double continuation_radius = 0.5;  // max root displacement accepted per ear insertion
    std::size_t seed_grid = 0;         // fallback seed rings tried when the seeded iteration stalls
};

struct EarStep {
    std::size_t ear_index;      // index of the clipped ear in that step's input polygon
    Complex w0;                 // rescaled corner zero: -i (c_{n+1} - c_1) / (c_n - c_1)
    double epsilon;             // accepted notch arc length
    std::size_t relabel_offset; // cyclic shift that made the ear the last vertex
};

struct Certificate {
    StepMap step_map;
    CertifiedRoots roots;
    double exterior_margin;
    std::vector<EarStep> ear_trace;
    VerificationReport checks;
};

// eps * h'(1 + eps w) written with the poles shifted to the corner scale:
// sum_k beta_k / (w + (xi_{n+1} - xi_k)/eps).  The offsets are computed from
// delta_k = tau_k - 2 pi as 1 - e^{i delta_k} = 2 sin^2(delta_k/2) - i sin(delta_k),
// exact at the corner pole itself and cancellation-free for the notch pole,
// where the direct difference 1 - e^{i tau_k} would lose every digit.
inline Complex renormalized_residual(const std::vector<Complex>& vertices, const Partition& tau,
                                     double eps, Complex w) {
    const std::size_t nv = vertices.size();
    if (tau.arcs() != nv) fail(errc::mismatched_inputs, "one partition arc per vertex required");
    if (!(eps > 0.0) || !std::isfinite(eps)) fail(errc::bad_input, "eps must be positive");
    Complex sum(0.0);
    for (std::size_t k = 0; k < nv; ++k) {
        Complex d = vertices[k] - vertices[(k + 1) % nv];
        Complex beta(d.imag() / two_pi, -d.real() / two_pi);
        double delta = tau[k + 1] - two_pi;
        double s = std::sin(0.5 * delta);
        Complex den = w + Complex(2.0 * s * s, -std::sin(delta)) / eps;
        if (std::abs(den) < 1e-15) fail(errc::at_pole, "w sits on a shifted pole");
        sum += beta / den;
    }
    return sum;
}

namespace detail {

inline std::vector<Complex> ring_seeds(std::size_t count, double radius, double phase) {
    std::vector<Complex> s(count);
    for (std::size_t j = 0; j < count; ++j)
        s[j] = std::polar(radius, two_pi * (static_cast<double>(j) + 0.37 + phase) /
                                      static_cast<double>(count));
    return s;
}

}  // namespace detail

struct EarInsertion {
    Partition partition;
    CertifiedRoots roots;
    EarStep step;
};

// One induction step: given a certified clipped n-gon (partition t, roots
// strictly outside the closed disk) and the ear as the last of n+1 vertices,
// find a notch width eps such that the (n+1)-gon step map on
//   tau = (t_0, ..., t_{n-1}, 2 pi - eps, 2 pi)
// again has all zeros of h' strictly outside.  For small eps the new zero
// enters near 1 + eps w0 with Re w0 > 0, so halving eps from eps0 terminates.
inline EarInsertion insert_ear(const Partition& t, const std::vector<Complex>& vertices,
                               const CertifiedRoots& prior, const SolveOptions& opts = {}) {
    const std::size_t n = t.arcs();
    if (vertices.size() != n + 1)
        fail(errc::mismatched_inputs, "need the clipped vertices plus the ear as the last entry");
    if (!(prior.exterior_margin > 0.0))
        fail(errc::bad_input, "prior roots are not certified exterior");

    const Complex succ = vertices[0];
    const Complex pred = vertices[n - 1];
    const Complex ear = vertices[n];
    if (std::abs(pred - succ) == 0.0) fail(errc::duplicate_vertex, "ear chord endpoints coincide");
    const Complex w0 = Complex(0.0, -1.0) * (ear - succ) / (pred - succ);
    if (!(w0.real() > 0.0))
        fail(errc::not_outside_corner, "rescaled corner zero lies in the closed left half plane");

    std::vector<double> tau = t.angles();
    tau.insert(tau.end() - 1, 0.0);  // slot for 2 pi - eps
    double eps = std::min(opts.eps0, 0.5 * t.arc_length(n - 1));
    for (int h = 0; h <= opts.max_halvings; ++h, eps *= 0.5) {
        if (eps < 1e-13) break;  // 2 pi - eps stops being meaningfully below 2 pi
        tau[n] = two_pi - eps;
        PoleSum ps = from_step_map(vertices, Partition(tau));

        std::vector<Complex> seeds = prior.roots;
        seeds.push_back(1.0 + eps * w0);
        std::optional<CertifiedRoots> cand;
        for (std::size_t attempt = 0; attempt <= opts.seed_grid && !cand; ++attempt) {
            try {
                cand = find_roots(ps, seeds);
            } catch (const error& e) {
                if (e.code() != errc::roots_not_converged) throw;
            }
            if (!cand && attempt < opts.seed_grid)
                seeds = detail::ring_seeds(n - 1,
                                           1.25 + 0.5 * static_cast<double>(attempt + 1) /
                                                      static_cast<double>(opts.seed_grid),
                                           0.1 * static_cast<double>(attempt + 1));
        }
        if (!cand) continue;

        bool continued = true;  // previously tracked zeros may not jump (Hurwitz)
        double worst_move = 0.0;
        for (const Complex& pr : prior.roots) {
            double dmin = std::numeric_limits<double>::infinity();
            for (const Complex& nr : cand->roots) dmin = std::min(dmin, std::abs(nr - pr));
            worst_move = std::max(worst_move, dmin);
            if (!(dmin < opts.continuation_radius)) continued = false;
        }
        if (!continued) continue;

        if (cand->exterior_margin > opts.min_margin)
            return {Partition(tau), std::move(*cand), EarStep{n, w0, eps, 0}};
    }
    fail(errc::epsilon_exhausted,
         "no notch width certified within " + std::to_string(opts.max_halvings) + " halvings");
}

namespace detail {

struct PartialCertificate {
    Partition t;
    CertifiedRoots roots;
    std::vector<EarStep> trace;
};

// Induction core.  Returns the partition in the frame of its own input
// vertex order; every level restores its caller's frame, so the top-level
// result is indexed exactly like the polygon handed to solve.
inline PartialCertificate solve_impl(const Polygon& p, const SolveOptions& opts) {
    const std::size_t n = p.size();
    if (n == 3) {
        Partition t = equal_partition(3);
        CertifiedRoots cr = find_roots(from_step_map(p.vertices(), t));
        if (!(cr.exterior_margin > 0.0))
            fail(errc::certification_inconsistent, "triangle base case failed to certify");
        return {std::move(t), std::move(cr), {}};
    }

    std::vector<EarReport> ears = find_ears(p);
    std::sort(ears.begin(), ears.end(), [](const EarReport& a, const EarReport& b) {
        if (a.robustness != b.robustness) return a.robustness > b.robustness;
        return a.index < b.index;
    });

    for (std::size_t attempt = 0; attempt < ears.size(); ++attempt) {
        const std::size_t ear = ears[attempt].index;
        const std::size_t o = (ear + 1) % n;  // rotate so the ear becomes the last vertex
        std::vector<Complex> rot(n);
        for (std::size_t j = 0; j < n; ++j) rot[j] = p[(o + j) % n];

        std::optional<Polygon> clipped;
        try {
            clipped = normalize(std::vector<Complex>(rot.begin(), rot.end() - 1));
        } catch (const error&) {
            continue;  // removal made a neighbor triple collinear: take the next ear
        }

        PartialCertificate sub = solve_impl(*clipped, opts);
        EarInsertion ins = insert_ear(sub.t, rot, sub.roots, opts);
        sub.trace.push_back(EarStep{ear, ins.step.w0, ins.step.epsilon, o});

        if (o == 0) return {std::move(ins.partition), std::move(ins.roots), std::move(sub.trace)};

        // Undo the relabeling: re-index vertices cyclically, never angles.
        // Vertex p[0] is rot[jstar]; rotating the disk by -theta, with theta
        // the angle where rot[jstar]'s arc starts, re-anchors the partition
        // at 0 while each vertex keeps its arc length.
        const std::size_t jstar = (n - o) % n;
        const double theta = ins.partition[jstar];
        std::vector<double> tp(n + 1);
        tp[0] = 0.0;
        for (std::size_t i = 1; i <= n; ++i)
            tp[i] = tp[i - 1] + ins.partition.arc_length((jstar + i - 1) % n);
        if (std::abs(tp[n] - two_pi) > 1e-12)
            fail(errc::certification_inconsistent, "arc lengths no longer sum to 2 pi");
        tp[n] = two_pi;

        std::vector<Complex> seeds(ins.roots.roots);
        const Complex spin = std::polar(1.0, -theta);
        for (Complex& s : seeds) s *= spin;
        Partition tprime{tp};
        CertifiedRoots cr = find_roots(from_step_map(p.vertices(), tprime), seeds);
        if (!(cr.exterior_margin > 0.0))
            fail(errc::certification_inconsistent, "exterior margin lost under relabeling");
        return {std::move(tprime), std::move(cr), std::move(sub.trace)};
    }
    fail(errc::no_two_ears, "every ear clip produced a degenerate polygon");
}

}  // namespace detail

// Constructive solver: clip an ear, solve the smaller polygon, re-insert the
// ear with a certified notch width, restore the original labeling, and verify
// the assembled map from scratch.
inline Certificate solve(const Polygon& p, const SolveOptions& opts = {}) {
    detail::PartialCertificate core = detail::solve_impl(p, opts);
    StepMap m(p, core.t);
    VerificationReport checks = verify(m);
    if (!checks.pass)
        fail(errc::certification_inconsistent, "independent verification rejected the map");
    const double margin = core.roots.exterior_margin;
    return Certificate{std::move(m), std::move(core.roots), margin, std::move(core.trace), checks};
}

}  // namespace polymap
