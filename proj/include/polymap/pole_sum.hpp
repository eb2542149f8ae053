#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

#include "error.hpp"
#include "partition.hpp"

namespace polymap {

using Complex = std::complex<double>;

// F(z) = sum_k residue_k / (z - pole_k) with every pole on the unit circle.
// Built from step-map boundary data this represents h'; the residues are
// differences of consecutive vertices, so they telescope to zero.
class PoleSum {
public:
    PoleSum(std::vector<Complex> poles, std::vector<Complex> residues)
        : poles_(std::move(poles)), residues_(std::move(residues)) {
        if (poles_.size() != residues_.size())
            fail(errc::mismatched_inputs, "pole and residue counts differ");
        if (poles_.size() < 2) fail(errc::bad_input, "need at least two poles");
        Complex total(0.0);
        double scale = 0.0;
        for (const Complex& a : residues_) {
            total += a;
            scale += std::abs(a);
        }
        if (std::abs(total) > 1e-13 * scale) fail(errc::bad_input, "residues must sum to zero");
        for (std::size_t k = 0; k < poles_.size(); ++k) {
            if (std::fabs(std::abs(poles_[k]) - 1.0) > 1e-14)
                fail(errc::bad_input, "pole off the unit circle");
            for (std::size_t j = k + 1; j < poles_.size(); ++j)
                if (std::abs(poles_[k] - poles_[j]) < 1e-14)
                    fail(errc::coincident_poles, "coincident poles");
        }
    }

    std::size_t size() const { return poles_.size(); }
    const std::vector<Complex>& poles() const { return poles_; }
    const std::vector<Complex>& residues() const { return residues_; }

private:
    std::vector<Complex> poles_;
    std::vector<Complex> residues_;
};

// Residues of h' for the boundary step map: pole k sits at the partition
// point t_{k+1} separating vertex k from vertex k+1, with residue
// (v_k - v_{k+1}) / (2*pi*i).
inline PoleSum from_step_map(const std::vector<Complex>& vertices, const Partition& t) {
    const std::size_t n = vertices.size();
    if (n < 3) fail(errc::too_few_vertices, "step map needs at least 3 vertices");
    if (t.arcs() != n) fail(errc::mismatched_inputs, "one partition arc per vertex required");
    for (std::size_t k = 0; k < n; ++k)
        if (t.arc_length(k) < 1e-14) fail(errc::coincident_poles, "partition points closer than 1e-14");
    std::vector<Complex> poles(n), residues(n);
    for (std::size_t k = 0; k < n; ++k) {
        poles[k] = std::polar(1.0, t[k + 1]);
        Complex d = vertices[k] - vertices[(k + 1) % n];
        residues[k] = Complex(d.imag(), -d.real()) / two_pi;  // d / (2*pi*i)
    }
    return PoleSum(std::move(poles), std::move(residues));
}

inline PoleSum from_step_map(const std::vector<Complex>& vertices, const std::vector<double>& angles) {
    // near-ties get the sharper error before Partition rejects the ordering
    for (std::size_t k = 0; k + 1 < angles.size(); ++k)
        if (std::fabs(angles[k + 1] - angles[k]) < 1e-14)
            fail(errc::coincident_poles, "partition points closer than 1e-14");
    return from_step_map(vertices, Partition(angles));
}

// Ascending coefficients of P(z) = sum_k a_k prod_{j != k} (z - zeta_j).
// Each product is monic, so skipping its top term drops the z^{n-1}
// coefficient structurally: that coefficient is exactly sum a_k = 0, and
// computing it would leave a rounding residue that corrupts the degree.
inline std::vector<Complex> numerator(const PoleSum& ps) {
    const std::size_t n = ps.size();
    std::vector<Complex> coef(n - 1, Complex(0.0));
    std::vector<Complex> prod;
    prod.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        prod.assign(1, Complex(1.0));
        for (std::size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            const Complex zeta = ps.poles()[j];
            prod.push_back(prod.back());
            for (std::size_t m = prod.size() - 2; m > 0; --m) prod[m] = prod[m - 1] - zeta * prod[m];
            prod[0] = -zeta * prod[0];
        }
        for (std::size_t m = 0; m + 1 < prod.size(); ++m) coef[m] += ps.residues()[k] * prod[m];
    }
    return coef;
}

inline Complex evaluate(const PoleSum& ps, Complex z) {
    Complex sum(0.0);
    for (std::size_t k = 0; k < ps.size(); ++k) {
        Complex d = z - ps.poles()[k];
        if (std::abs(d) < 1e-15) fail(errc::at_pole, "evaluation point hits a pole");
        sum += ps.residues()[k] / d;
    }
    return sum;
}

inline Complex evaluate_derivative(const PoleSum& ps, Complex z) {
    Complex sum(0.0);
    for (std::size_t k = 0; k < ps.size(); ++k) {
        Complex d = z - ps.poles()[k];
        if (std::abs(d) < 1e-15) fail(errc::at_pole, "evaluation point hits a pole");
        sum -= ps.residues()[k] / (d * d);
    }
    return sum;
}

// Residues of g': g'(z) = -sum_k conj(a_k) / (z - zeta_k).
inline PoleSum conjugate_residues(const PoleSum& ps) {
    std::vector<Complex> r(ps.size());
    for (std::size_t k = 0; k < ps.size(); ++k) r[k] = -std::conj(ps.residues()[k]);
    return PoleSum(ps.poles(), std::move(r));
}

struct CertifiedRoots {
    std::vector<Complex> roots;
    std::vector<double> error_radius;
    double exterior_margin = std::numeric_limits<double>::infinity();  // min |root| - radius - 1
    std::size_t retained_degree = 0;
    bool degenerate = false;  // numerator degree fell below n - 2
};

namespace detail {

inline void horner_pair(const std::vector<Complex>& coef, Complex z, Complex& p, Complex& dp) {
    p = coef.back();
    dp = Complex(0.0);
    for (std::size_t m = coef.size() - 1; m-- > 0;) {
        dp = dp * z + p;
        p = p * z + coef[m];
    }
}

inline void pole_form(const PoleSum& ps, Complex z, Complex& f, Complex& df, double& pole_dist) {
    f = df = Complex(0.0);
    pole_dist = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < ps.size(); ++k) {
        Complex d = z - ps.poles()[k];
        double ad = std::abs(d);
        pole_dist = std::min(pole_dist, ad);
        if (ad < 1e-300) continue;
        Complex t = ps.residues()[k] / d;
        f += t;
        df -= t / d;
    }
}

}  // namespace detail

// All finite zeros of the pole sum with per-root error radii.  Simultaneous
// Aberth-Ehrlich iteration, then Newton polish.  The expanded numerator is
// used only to fix the degree and the starting ring; every evaluation in the
// iteration itself uses the factored identity P'/P = F'/F + sum_k 1/(z-zeta_k),
// which stays well conditioned when poles cluster and the expanded
// coefficients do not.
inline CertifiedRoots find_roots(const PoleSum& ps, const std::vector<Complex>& seeds = {}) {
    const std::vector<Complex> p = numerator(ps);
    double maxmag = 0.0;
    for (const Complex& c : p) maxmag = std::max(maxmag, std::abs(c));
    CertifiedRoots out;
    if (maxmag == 0.0) {
        out.degenerate = true;
        return out;
    }
    std::size_t d = 0;
    for (std::size_t m = 0; m < p.size(); ++m)
        if (std::abs(p[m]) > 1e-12 * maxmag) d = m;
    out.retained_degree = d;
    out.degenerate = d + 1 < p.size();
    if (d == 0) return out;  // constant numerator: the only zeros sit at infinity

    std::vector<Complex> q(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(d) + 1);
    const Complex lead = q.back();
    for (Complex& c : q) c /= lead;

    std::vector<Complex> r(d);
    double bound = 0.0;
    for (std::size_t m = 0; m < d; ++m) bound = std::max(bound, std::abs(q[m]));
    const double ring = std::max(1.5, 1.0 + bound);
    for (std::size_t j = 0; j < d; ++j) {
        if (j < seeds.size())
            r[j] = seeds[j];  // extra seeds are dropped, missing ones ring-filled
        else
            r[j] = std::polar(ring, two_pi * (static_cast<double>(j) + 0.37) / static_cast<double>(d));
    }

    bool converged = false;
    double worst = 0.0;
    for (int sweep = 0; sweep < 200 && !converged; ++sweep) {
        converged = true;
        worst = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            Complex f(0.0), df(0.0), ls(0.0);
            double asum = 0.0, pole_dist = std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k < ps.size(); ++k) {
                Complex dz = r[j] - ps.poles()[k];
                double ad = std::abs(dz);
                pole_dist = std::min(pole_dist, ad);
                if (ad < 1e-300) break;
                Complex t = ps.residues()[k] / dz;
                f += t;
                df -= t / dz;
                ls += 1.0 / dz;
                asum += std::abs(t);
            }
            if (pole_dist < 1e-300) {
                r[j] += Complex(1e-8, 7e-9) * (1.0 + std::abs(r[j]));  // iterate landed on a pole
                converged = false;
                continue;
            }
            if (std::abs(f) <= 16.0 * 1.1102230246251565e-16 * asum)
                continue;  // residual at the pole-form rounding floor: done in doubles
            Complex dlog = df + f * ls;  // P'(z)/P(z) times F(z), poles of F cancel against Q
            Complex w = std::abs(dlog) > 0.0 ? f / dlog : Complex(1e-8);
            Complex s(0.0);
            for (std::size_t i = 0; i < d; ++i) {
                if (i == j) continue;
                Complex diff = r[j] - r[i];
                if (std::abs(diff) < 1e-14 * (1.0 + std::abs(r[j]))) {
                    r[j] += Complex(1e-7, 7e-8) * (1.0 + std::abs(r[j]));  // split merged iterates
                    diff = r[j] - r[i];
                }
                s += 1.0 / diff;
            }
            Complex denom = 1.0 - w * s;
            Complex step = std::abs(denom) > 1e-30 ? w / denom : w;
            r[j] -= step;
            double rel = std::abs(step) / (1.0 + std::abs(r[j]));
            worst = std::max(worst, rel);
            if (rel > 1e-13) converged = false;
        }
    }
    if (!converged) {
        std::ostringstream msg;
        msg << "aberth sweep limit reached, worst relative correction " << worst;
        fail(errc::roots_not_converged, msg.str());
    }

    for (std::size_t j = 0; j < d; ++j) {
        for (int it = 0; it < 20; ++it) {
            Complex f, df;
            double pole_dist;
            detail::pole_form(ps, r[j], f, df, pole_dist);
            if (!(std::abs(df) > 0.0) || pole_dist < 1e-15) break;
            Complex step = f / df;
            double len = std::abs(step);
            if (!std::isfinite(len)) break;
            const double cap = 0.5 * pole_dist;  // clustered poles: keep steps local
            if (len > cap) step *= cap / len;
            r[j] -= step;
            if (std::abs(step) < 1e-15 * (1.0 + std::abs(r[j]))) break;
        }
    }

    // Certified enclosure from the partial-fraction identity: P'/P sums
    // 1/(z - root) over all d roots, so the nearest root lies within
    // d |P/P'|.  P'/P = F'/F + sum_k 1/(z - zeta_k) keeps the bound
    // computable in the pole form, which stays conditioned when poles
    // cluster and the expanded coefficients do not.  |F| is floored at its
    // own evaluation noise so the claim never outruns double precision.
    const double nd = static_cast<double>(d);
    std::vector<double> radius(d);
    for (std::size_t j = 0; j < d; ++j) {
        Complex f(0.0), df(0.0), s(0.0);
        double asum = 0.0, pole_dist = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < ps.size(); ++k) {
            Complex dz = r[j] - ps.poles()[k];
            double ad = std::abs(dz);
            pole_dist = std::min(pole_dist, ad);
            if (ad < 1e-300) continue;
            Complex t = ps.residues()[k] / dz;
            f += t;
            df -= t / dz;
            s += 1.0 / dz;
            asum += std::abs(t);
        }
        double rad = std::numeric_limits<double>::infinity();
        if (pole_dist > 1e-300) {
            Complex denom = df + f * s;
            double fa = std::max(std::abs(f), 2.220446049250313e-16 * asum);
            if (std::abs(denom) > 0.0) rad = nd * fa / std::abs(denom);
        }
        radius[j] = rad;
    }

    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < d; ++j) margin = std::min(margin, std::abs(r[j]) - radius[j]);
    out.roots = std::move(r);
    out.error_radius = std::move(radius);
    out.exterior_margin = margin - 1.0;
    return out;
}

}  // namespace polymap
