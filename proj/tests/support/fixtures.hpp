#pragma once

// Shared test fixtures: hand-picked polygons, regular n-gons, and seeded
// random generators (random-walk polygons filtered for simplicity, random
// partitions).  Everything is deterministic under a fixed seed.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "polymap/polygon.hpp"

namespace fixtures {

using Complex = std::complex<double>;
inline constexpr double pi = std::numbers::pi;

inline std::vector<Complex> lshape() {
    return {{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
}

// Comb with three rectangular teeth.
inline std::vector<Complex> comb3() {
    return {{0, 0}, {5, 0}, {5, 2}, {4, 2}, {4, 1}, {3, 1},
            {3, 2}, {2, 2}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
}

// Rectangular spiral strip: a width-1 corridor that enters at the bottom
// edge, wraps one full turn, and dead-ends at an interior tip.
inline std::vector<Complex> spiral() {
    return {{0, 0}, {6, 0}, {6, 6}, {1, 6}, {1, 2}, {4, 2},
            {4, 3}, {2, 3}, {2, 5}, {5, 5}, {5, 1}, {0, 1}};
}

inline std::vector<Complex> unit_square() {
    return {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
}

// Unit square with one ear vertex attached between (0,1) and (0,0); the ear
// is last, as the insertion step expects.
inline std::vector<Complex> square_plus_ear() {
    return {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {-0.5, 0.5}};
}

// Simple non-convex quadrilateral (reflex corner at the last vertex).
inline std::vector<Complex> bad_quad() {
    return {{0, 0}, {3, 0}, {3, 3}, {1.2, 1.0}};
}

inline std::vector<Complex> regular_ngon(std::size_t n) {
    std::vector<Complex> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = std::polar(1.0, 2.0 * pi * double(k + 1) / double(n));
    return v;
}

// Random-walk polygon: vertices are partial sums of random steps, kept only
// if the closed cycle is a valid Jordan polygon.
inline polymap::Polygon random_simple_polygon(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
    std::uniform_real_distribution<double> len(0.5, 1.5);
    for (;;) {
        std::vector<Complex> v;
        Complex pos{0, 0};
        for (std::size_t k = 0; k < n; ++k) {
            v.push_back(pos);
            pos += std::polar(len(rng), angle(rng));
        }
        try {
            return polymap::normalize(v);
        } catch (const polymap::error&) {
            // self-intersecting (or otherwise degenerate) walk; try again
        }
    }
}

// Strictly increasing partition 0 = t_0 < ... < t_n = 2*pi with a minimum gap.
inline std::vector<double> random_partition(std::mt19937_64& rng, std::size_t n,
                                            double min_gap = 1e-3) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * pi);
    for (;;) {
        std::vector<double> t{0.0};
        for (std::size_t k = 0; k + 1 < n; ++k) t.push_back(u(rng));
        t.push_back(2.0 * pi);
        std::sort(t.begin(), t.end());
        bool ok = true;
        for (std::size_t k = 0; k + 1 < t.size(); ++k)
            if (t[k + 1] - t[k] < min_gap) ok = false;
        if (ok) return t;
    }
}

inline Complex random_point_in_disk(std::mt19937_64& rng, double rmax) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double r = rmax * std::sqrt(u(rng));
    double a = 2.0 * pi * u(rng);
    return std::polar(r, a);
}

}  // namespace fixtures
