#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "error.hpp"
#include "poisson.hpp"

// Diagnostic interval-folding estimates in the half-plane model.  Everything
// here works with the RAW angle omega (not omega / pi): the limit ratios
// below are stated for the unnormalized convention, and mixing the two costs
// a silent factor of pi.

namespace polymap {

// Real points x_0 < x_1 < ... < x_{n-1}; bounded interval k is
// [x_k, x_{k+1}] for k < n-1, and index n-1 names the unbounded complement
// through infinity.
class IntervalLayout {
public:
    explicit IntervalLayout(std::vector<double> abscissas) : abscissas_(std::move(abscissas)) {
        if (abscissas_.size() < 2) fail(errc::bad_input, "need at least two abscissas");
        for (double x : abscissas_)
            if (!std::isfinite(x)) fail(errc::bad_input, "non-finite abscissa");
        for (std::size_t j = 0; j + 1 < abscissas_.size(); ++j)
            if (!(abscissas_[j] < abscissas_[j + 1]))
                fail(errc::nonpositive_length, "interval lengths must be positive");
    }

    std::size_t size() const { return abscissas_.size(); }
    const std::vector<double>& abscissas() const { return abscissas_; }

    double length(std::size_t j) const {
        if (j + 1 >= abscissas_.size()) fail(errc::index_range, "interval index out of range");
        return abscissas_[j + 1] - abscissas_[j];
    }

private:
    std::vector<double> abscissas_;
};

// Limit of omega(z)/y as z approaches a boundary point at distance A from an
// interval of length B, along any ray into the upper half-plane.
inline double los_limit(double A, double B) {
    if (!(A > 0.0) || !(B > 0.0)) fail(errc::nonpositive_length, "lengths must be positive");
    return B / (A * A + A * B);
}

// Finite-y sample of omega(z)/y: z sits on the ray from the origin at the
// given angle, height y, and the interval is [A, A + B].
inline double los_empirical(double A, double B, double approach_angle, double y) {
    if (!(A > 0.0) || !(B > 0.0)) fail(errc::nonpositive_length, "lengths must be positive");
    if (!(approach_angle > 0.0) || !(approach_angle < pi))
        fail(errc::bad_input, "approach angle must lie in (0, pi)");
    Complex z(y * std::cos(approach_angle) / std::sin(approach_angle), y);
    return half_plane_angle(z, A, A + B) / y;
}

// Small-y estimate of omega_k(z)/y when z approaches abscissa m: the
// distance S from x_m to the near end of interval k folds the lengths in
// between, giving los_limit(S, length_k).  The unbounded interval is
// estimated through its right ray [x_{n-1}, +inf) alone, the B -> infinity
// limit 1/S.  Intervals touching x_m have no finite estimate.
inline double omega_ratio_approx(const IntervalLayout& layout, std::size_t m, std::size_t k) {
    const std::size_t n = layout.size();
    if (m >= n || k >= n) fail(errc::index_range, "abscissa or interval index out of range");
    if (k == m || k + 1 == m) fail(errc::index_adjacent, "interval touches the approach point");
    if (k == n - 1) {
        if (m == 0) fail(errc::index_adjacent, "unbounded interval touches the leftmost point");
        return 1.0 / (layout.abscissas()[n - 1] - layout.abscissas()[m]);
    }
    double S = k > m ? layout.abscissas()[k] - layout.abscissas()[m]
                     : layout.abscissas()[m] - layout.abscissas()[k + 1];
    return los_limit(S, layout.length(k));
}

}  // namespace polymap
