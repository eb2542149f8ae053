#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "polymap/pole_sum.hpp"
#include "support/checks.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using polymap::Complex;
using polymap::errc;
using polymap::Partition;
using polymap::PoleSum;
using polymap::two_pi;

namespace {

std::vector<Complex> random_cycle(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<Complex> v(n);
    for (Complex& c : v) c = Complex(g(rng), g(rng));
    return v;
}

Complex horner(const std::vector<Complex>& coef, Complex z) {
    Complex p = coef.back();
    for (std::size_t m = coef.size() - 1; m-- > 0;) p = p * z + coef[m];
    return p;
}

}  // namespace

TEST_CASE("from_step_map residues and poles", "[pole_sum]") {
    SECTION("square with equal arcs") {
        std::vector<Complex> v = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        PoleSum ps = polymap::from_step_map(v, polymap::equal_partition(4));
        Complex a0 = (v[0] - v[1]) / (Complex(0, 1) * two_pi);
        CHECK(std::abs(ps.residues()[0] - a0) < 1e-15);
        CHECK(std::abs(ps.poles()[0] - Complex(0, 1)) < 1e-15);
        CHECK(std::abs(ps.poles()[1] - Complex(-1, 0)) < 1e-15);
        CHECK(std::abs(ps.poles()[3] - Complex(1, 0)) < 1e-15);
    }

    SECTION("residues telescope to zero on random cycles") {
        std::mt19937_64 rng(11);
        for (int iter = 0; iter < 100; ++iter) {
            std::size_t n = 3 + rng() % 8;
            PoleSum ps = polymap::from_step_map(random_cycle(rng, n),
                                                fixtures::random_partition(rng, n));
            Complex total(0.0);
            double scale = 0.0;
            for (const Complex& a : ps.residues()) total += a, scale += std::abs(a);
            CHECK(std::abs(total) <= 1e-13 * scale);
        }
    }

    SECTION("coincident partition points") {
        std::vector<Complex> v = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
        CHECK(code_of([&] {
                  polymap::from_step_map(v, std::vector<double>{0.0, 1.0, 1.0, 4.0, two_pi});
              }) == errc::coincident_poles);
        CHECK(code_of([&] {
                  polymap::from_step_map(v, std::vector<double>{0.0, 1.0, 1.0 + 1e-15, 4.0, two_pi});
              }) == errc::coincident_poles);
        // a pole hugging t = 0 collides with the pole at t = 2*pi
        CHECK(code_of([&] {
                  polymap::from_step_map(v, std::vector<double>{0.0, 1e-15, 1.0, 4.0, two_pi});
              }) == errc::coincident_poles);
    }

    SECTION("input validation") {
        std::vector<Complex> tri = {{0, 0}, {1, 0}, {0, 1}};
        CHECK(code_of([&] {
                  polymap::from_step_map({{0, 0}, {1, 0}}, polymap::equal_partition(3).angles());
              }) == errc::too_few_vertices);
        CHECK(code_of([&] {
                  polymap::from_step_map(tri, polymap::equal_partition(4));
              }) == errc::mismatched_inputs);
        CHECK(code_of([&] {
                  polymap::from_step_map(tri, std::vector<double>{0.1, 2.0, 4.0, two_pi});
              }) == errc::invalid_partition);
        CHECK(code_of([&] {
                  polymap::from_step_map(tri, std::vector<double>{0.0, 4.0, 2.0, two_pi});
              }) == errc::invalid_partition);
    }

    SECTION("direct construction validation") {
        Complex a(0.25, -0.5);
        CHECK(code_of([&] { PoleSum({Complex(1, 0), Complex(0, 1)}, {a, a}); }) == errc::bad_input);
        CHECK(code_of([&] { PoleSum({Complex(1.1, 0), Complex(0, 1)}, {a, -a}); }) == errc::bad_input);
        CHECK(code_of([&] { PoleSum({Complex(1, 0), Complex(1, 0)}, {a, -a}); }) ==
              errc::coincident_poles);
        CHECK(code_of([&] { PoleSum({Complex(1, 0), Complex(0, 1)}, {a}); }) ==
              errc::mismatched_inputs);
    }
}

TEST_CASE("numerator of a regular polygon with equal arcs is constant", "[pole_sum]") {
    // sum_k zeta_k prod_{j!=k} (z - zeta_j) = z Q' - n Q = n for Q = z^n - 1,
    // so P collapses to n (1 - rho) / (2 pi i) with rho the primitive root.
    for (std::size_t n = 3; n <= 8; ++n) {
        auto p = polymap::numerator(
            polymap::from_step_map(fixtures::regular_ngon(n), polymap::equal_partition(n)));
        REQUIRE(p.size() == n - 1);
        Complex rho = std::polar(1.0, two_pi / static_cast<double>(n));
        Complex expected = static_cast<double>(n) * (1.0 - rho) / (Complex(0, 1) * two_pi);
        CHECK(std::abs(p[0] - expected) < 1e-12 * std::abs(expected));
        for (std::size_t m = 1; m < p.size(); ++m) CHECK(std::abs(p[m]) < 1e-12 * std::abs(p[0]));
    }
}

TEST_CASE("numerator quotient matches direct evaluation", "[pole_sum][property]") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> rad(0.3, 3.0), ang(0.0, two_pi);
    int checked = 0;
    while (checked < 100) {
        std::size_t n = 3 + rng() % 8;
        PoleSum ps = polymap::from_step_map(random_cycle(rng, n),
                                            fixtures::random_partition(rng, n));
        Complex z = std::polar(rad(rng), ang(rng));
        double dist = std::numeric_limits<double>::infinity();
        for (const Complex& zeta : ps.poles()) dist = std::min(dist, std::abs(z - zeta));
        if (dist < 0.1) continue;
        Complex quotient = horner(polymap::numerator(ps), z);
        for (const Complex& zeta : ps.poles()) quotient /= z - zeta;
        Complex direct = polymap::evaluate(ps, z);
        CHECK(std::abs(quotient - direct) <= 1e-10 * (1.0 + std::abs(direct)));
        ++checked;
    }
}

TEST_CASE("evaluate", "[pole_sum]") {
    SECTION("two-pole instance at the chord midpoint") {
        Complex a(0.3, 0.2);
        PoleSum ps({Complex(1, 0), Complex(0, 1)}, {a, -a});
        Complex z(0.5, 0.5);
        Complex expected = a * (1.0 / (z - Complex(1, 0)) - 1.0 / (z - Complex(0, 1)));
        CHECK(std::abs(polymap::evaluate(ps, z) - expected) < 1e-15);
    }

    SECTION("double zero at infinity") {
        PoleSum ps = polymap::from_step_map(fixtures::lshape(), polymap::equal_partition(6));
        Complex s1(0.0);
        double asum = 0.0;
        for (std::size_t k = 0; k < ps.size(); ++k) {
            s1 += ps.residues()[k] * ps.poles()[k];
            asum += std::abs(ps.residues()[k]);
        }
        REQUIRE(std::abs(s1) > 1e-3);
        // the next Laurent term is bounded by sum |a_k|, so the gap decays as 1/r
        for (double r : {1e3, 1e6}) {
            Complex z = std::polar(r, 0.7);
            CHECK(std::abs(polymap::evaluate(ps, z) * z * z - s1) < 4.0 * asum / r);
        }
    }

    SECTION("evaluation at a pole is refused") {
        PoleSum ps = polymap::from_step_map(fixtures::lshape(), polymap::equal_partition(6));
        CHECK(code_of([&] { polymap::evaluate(ps, ps.poles()[2]); }) == errc::at_pole);
        CHECK(code_of([&] { polymap::evaluate_derivative(ps, ps.poles()[2]); }) == errc::at_pole);
    }
}

TEST_CASE("conjugate_residues", "[pole_sum]") {
    std::mt19937_64 rng(5);
    PoleSum ps = polymap::from_step_map(random_cycle(rng, 6), fixtures::random_partition(rng, 6));

    SECTION("real residues flip sign") {
        PoleSum real_ps({Complex(1, 0), Complex(-1, 0)}, {Complex(2.0), Complex(-2.0)});
        PoleSum g = polymap::conjugate_residues(real_ps);
        CHECK(std::abs(g.residues()[0] - Complex(-2.0)) == 0.0);
        CHECK(std::abs(g.residues()[1] - Complex(2.0)) == 0.0);
    }

    SECTION("applying twice restores the original") {
        PoleSum gg = polymap::conjugate_residues(polymap::conjugate_residues(ps));
        for (std::size_t k = 0; k < ps.size(); ++k) {
            CHECK(ps.poles()[k] == gg.poles()[k]);
            CHECK(ps.residues()[k] == gg.residues()[k]);
        }
    }
}

TEST_CASE("find_roots on degenerate and tiny instances", "[pole_sum]") {
    SECTION("regular pentagon with equal arcs has no critical points") {
        auto cr = polymap::find_roots(
            polymap::from_step_map(fixtures::regular_ngon(5), polymap::equal_partition(5)));
        CHECK(cr.roots.empty());
        CHECK(std::isinf(cr.exterior_margin));
        CHECK(cr.degenerate);
        CHECK(cr.retained_degree == 0);
    }

    SECTION("equilateral vertices with a shifted arc have one exterior root") {
        std::vector<double> t = {0.0, two_pi / 3.0 + 0.3, 2.0 * two_pi / 3.0, two_pi};
        auto ps = polymap::from_step_map(fixtures::regular_ngon(3), t);
        auto cr = polymap::find_roots(ps);
        REQUIRE(cr.roots.size() == 1);
        CHECK(!cr.degenerate);
        CHECK(std::abs(cr.roots[0]) > 1.0);
        CHECK(cr.exterior_margin > 0.0);
        auto ev = oracle::companion_roots(polymap::numerator(ps));
        REQUIRE(ev.size() == 1);
        CHECK(std::abs(ev[0] - cr.roots[0]) < 1e-10);
    }
}

TEST_CASE("find_roots matches companion-matrix eigenvalues", "[pole_sum][property]") {
    std::mt19937_64 rng(2025);
    for (int iter = 0; iter < 500; ++iter) {
        std::size_t n = 3 + rng() % 8;
        PoleSum ps = polymap::from_step_map(random_cycle(rng, n),
                                            fixtures::random_partition(rng, n));
        auto cr = polymap::find_roots(ps);
        if (cr.degenerate) continue;  // random data: effectively unreachable
        REQUIRE(cr.roots.size() == n - 2);
        auto ev = oracle::companion_roots(polymap::numerator(ps));
        REQUIRE(ev.size() == cr.roots.size());
        for (const Complex& lambda : ev) {
            double best = std::numeric_limits<double>::infinity();
            std::size_t bj = 0;
            for (std::size_t j = 0; j < cr.roots.size(); ++j)
                if (std::abs(lambda - cr.roots[j]) < best) best = std::abs(lambda - cr.roots[j]), bj = j;
            CHECK(best <= cr.error_radius[bj] + 1e-6 * (1.0 + std::abs(lambda)));
        }
        double margin = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < cr.roots.size(); ++j)
            margin = std::min(margin, std::abs(cr.roots[j]) - cr.error_radius[j]);
        CHECK(cr.exterior_margin == margin - 1.0);
    }
}

TEST_CASE("seeds reproduce converged roots in place", "[pole_sum]") {
    std::mt19937_64 rng(31);
    PoleSum ps = polymap::from_step_map(random_cycle(rng, 8), fixtures::random_partition(rng, 8));
    auto first = polymap::find_roots(ps);
    REQUIRE(first.roots.size() == 6);
    auto second = polymap::find_roots(ps, first.roots);
    REQUIRE(second.roots.size() == first.roots.size());
    for (std::size_t j = 0; j < first.roots.size(); ++j)
        CHECK(std::abs(first.roots[j] - second.roots[j]) < 1e-10);
}
