#include <cmath>
#include <numbers>

#include "annuli/geometry.hpp"
#include "doctest.h"

using namespace annuli;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("trivial annulus perimeter and area") {
    const DomainGeometry g = perimeter_area(0.5, FourierPerturbation::zero());
    CHECK(g.perimeter == doctest::Approx(3.0 * kPi).epsilon(1e-14));
    CHECK(g.area == doctest::Approx(0.75 * kPi).epsilon(1e-14));
    CHECK(g.inner_length == doctest::Approx(kPi).epsilon(1e-14));
    CHECK(g.outer_length == doctest::Approx(2.0 * kPi).epsilon(1e-14));
}

TEST_CASE("mean-zero perturbation changes the area only at second order") {
    const double base = perimeter_area(0.5, FourierPerturbation::zero()).area;
    double gaps[2];
    int idx = 0;
    for (double eps : {1e-3, 2e-3}) {
        FourierPerturbation p = FourierPerturbation::zero(1);
        p.coeffs1[1] = eps;  // eps cos(2 theta), mean-zero
        gaps[idx++] = std::abs(perimeter_area(0.5, p).area - base);
    }
    // quadratic scaling: doubling eps quadruples the gap
    CHECK(gaps[1] / gaps[0] == doctest::Approx(4.0).epsilon(0.05));
    CHECK(gaps[0] < 1e-5);
}

TEST_CASE("quadrature is stable under node doubling") {
    FourierPerturbation p = FourierPerturbation::zero(3);
    p.coeffs1[1] = 0.04;
    p.coeffs2[2] = -0.02;
    p.coeffs2[3] = 0.01;
    const DomainGeometry a = perimeter_area(0.45, p, 256);
    const DomainGeometry b = perimeter_area(0.45, p, 512);
    CHECK(std::abs(a.perimeter - b.perimeter) < 1e-12 * b.perimeter);
    CHECK(std::abs(a.area - b.area) < 1e-12 * b.area);
}

TEST_CASE("inadmissible perturbation is rejected") {
    FourierPerturbation p = FourierPerturbation::zero(0);
    p.coeffs1[0] = 0.7;
    CHECK_THROWS_AS(perimeter_area(0.5, p), std::invalid_argument);
}

TEST_CASE("self-Cheeger identity on the trivial annulus") {
    for (double lam : {0.3, 0.5, 0.7}) {
        const RadialSolution rad = boundary_data({2, lam});
        const CheegerReport rep = cheeger_report(lam, FourierPerturbation::zero(), rad.c);
        // P / |Omega| = 2/(1 - lambda) = 1/c exactly
        CHECK(rep.ratio == doctest::Approx(2.0 / (1.0 - lam)).epsilon(1e-13));
        CHECK(rep.gap_abs < 1e-12 * rep.inv_c);
        CHECK(rep.div_gap < 1e-13);
    }
}

TEST_CASE("gradient bound on the trivial annulus") {
    const RadialSolution rad = boundary_data({2, 0.5});
    const auto grid = build_grid(0.5, FourierPerturbation::zero(), 24, 32);
    const DirichletSolution sol = solve_dirichlet(grid, rad.a);
    const GradientBoundReport rep = gradient_bound_check(sol, rad.c);
    CHECK(rep.strictly_below);
    CHECK(rep.max_interior < rad.c);
    CHECK(rep.max_interior < rep.max_boundary);
    CHECK(rep.max_boundary == doctest::Approx(rad.c).epsilon(1e-9));
}
