#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "error.hpp"
#include "partition.hpp"
#include "pole_sum.hpp"
#include "polygon.hpp"

namespace polymap {

inline constexpr double pi = 3.1415926535897932384626433832795;

// Boundary step function: vertex k of the polygon on arc (t_k, t_{k+1}).
class StepMap {
public:
    StepMap(Polygon polygon, Partition partition)
        : polygon_(std::move(polygon)), partition_(std::move(partition)) {
        if (polygon_.size() != partition_.arcs())
            fail(errc::mismatched_inputs, "one partition arc per vertex required");
    }

    std::size_t size() const { return polygon_.size(); }
    const Polygon& polygon() const { return polygon_; }
    const Partition& partition() const { return partition_; }

private:
    Polygon polygon_;
    Partition partition_;
};

inline PoleSum from_step_map(const StepMap& m) {
    return from_step_map(m.polygon().vertices(), m.partition());
}

// Step function on the real line: value k on (x_k, x_{k+1}) for k < n-1 and
// the last value on the unbounded complement through infinity.
class HalfPlaneStepMap {
public:
    HalfPlaneStepMap(std::vector<double> abscissas, std::vector<Complex> vertices)
        : abscissas_(std::move(abscissas)), vertices_(std::move(vertices)) {
        if (abscissas_.size() != vertices_.size())
            fail(errc::mismatched_inputs, "one vertex per abscissa required");
        if (abscissas_.size() < 2) fail(errc::too_few_vertices, "need at least 2 abscissas");
        for (double x : abscissas_)
            if (!std::isfinite(x)) fail(errc::invalid_partition, "non-finite abscissa");
        for (std::size_t k = 0; k + 1 < abscissas_.size(); ++k)
            if (!(abscissas_[k] < abscissas_[k + 1]))
                fail(errc::invalid_partition, "abscissas must increase strictly");
    }

    std::size_t size() const { return abscissas_.size(); }
    const std::vector<double>& abscissas() const { return abscissas_; }
    const std::vector<Complex>& vertices() const { return vertices_; }

private:
    std::vector<double> abscissas_;
    std::vector<Complex> vertices_;
};

// Harmonic measure of the boundary arc (theta_a, theta_b) seen from z.
// The closed form is (1/pi) arg[(e^{i theta_b} - z)/(e^{i theta_a} - z)]
// minus delta/(2 pi); the true angle lies in (delta/2, pi + delta/2).  A
// wrapped principal value sits below delta/2 - pi and gets lifted; testing
// against the midpoint of the dead zone [delta/2 - pi, delta/2] matters,
// because z near the circle and far from the arc puts the true angle within
// rounding noise of delta/2 itself, where a knife-edge test would misfire.
inline double disk_harmonic_measure(Complex z, double theta_a, double theta_b) {
    const double delta = theta_b - theta_a;
    if (!(delta > 0.0) || !(delta < two_pi)) fail(errc::bad_input, "arc length must lie in (0, 2*pi)");
    if (std::abs(z) >= 1.0 - 1e-14) fail(errc::out_of_disk, "point too close to the boundary");
    double phi = std::arg((std::polar(1.0, theta_b) - z) / (std::polar(1.0, theta_a) - z));
    if (phi < 0.5 * delta - 0.5 * pi) phi += two_pi;
    return phi / pi - delta / two_pi;
}

inline Complex evaluate_map(const StepMap& m, Complex z) {
    const Partition& t = m.partition();
    Complex sum(0.0);
    for (std::size_t k = 0; k < m.size(); ++k)
        sum += m.polygon()[k] * disk_harmonic_measure(z, t[k], t[k + 1]);
    return sum;
}

// J = |h'|^2 - |g'|^2; positive exactly where the extension preserves
// orientation.
inline double jacobian(const StepMap& m, Complex z) {
    if (std::abs(z) >= 1.0 - 1e-14) fail(errc::out_of_disk, "point too close to the boundary");
    PoleSum hp = from_step_map(m);
    return std::norm(evaluate(hp, z)) - std::norm(evaluate(conjugate_residues(hp), z));
}

// Angle subtended at z by the real interval [a, b]; equals pi times the
// harmonic measure of the interval.  The atan2 form stays accurate when the
// angle is tiny.
inline double half_plane_angle(Complex z, double a, double b) {
    if (!(a < b)) fail(errc::bad_input, "interval endpoints must satisfy a < b");
    if (!(z.imag() > 0.0)) fail(errc::not_upper_half_plane, "point must have positive imaginary part");
    return std::atan2(z.imag() * (b - a), (z.real() - a) * (z.real() - b) + z.imag() * z.imag());
}

// Harmonic extension in the upper half-plane; the unbounded interval takes
// the complementary measure, so the total is 1 by construction.
inline Complex half_plane_map(const HalfPlaneStepMap& m, Complex z) {
    if (!(z.imag() > 0.0)) fail(errc::not_upper_half_plane, "point must have positive imaginary part");
    const std::size_t n = m.size();
    double total = 0.0;
    Complex sum(0.0);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        double w = half_plane_angle(z, m.abscissas()[k], m.abscissas()[k + 1]) / pi;
        total += w;
        sum += m.vertices()[k] * w;
    }
    return sum + m.vertices()[n - 1] * (1.0 - total);
}

}  // namespace polymap
