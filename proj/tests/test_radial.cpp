#include <cmath>
#include <stdexcept>

#include "annuli/radial.hpp"
#include "doctest.h"

using namespace annuli;

TEST_CASE("boundary data at reference points") {
    const RadialSolution s2 = boundary_data({2, 0.5});
    // c = (1 - lambda^2)/(2 (1 + lambda)) = (1 - lambda)/2
    CHECK(s2.c == doctest::Approx(0.25).epsilon(1e-15));
    // (1/2) lambda log lambda + (1/4)(1 - lambda^2), evaluated independently
    CHECK(s2.a == doctest::Approx(0.014213204860013672).epsilon(1e-13));

    const RadialSolution s3 = boundary_data({3, 0.5});
    CHECK(s3.a == doctest::Approx(0.025).epsilon(1e-14));
    CHECK(s3.c == doctest::Approx(7.0 / 30.0).epsilon(1e-15));
}

TEST_CASE("c tends to 1/n as lambda -> 0") {
    for (int n = 2; n <= 6; ++n) {
        const RadialSolution s = boundary_data({n, 1e-6});
        CHECK(s.c == doctest::Approx(1.0 / n).epsilon(1e-4));
    }
}

TEST_CASE("boundary data rejects bad parameters") {
    CHECK_THROWS_AS(boundary_data({1, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(boundary_data({2, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(boundary_data({2, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(boundary_data({2, -0.3}), std::invalid_argument);
}

TEST_CASE("radial profile boundary values") {
    const ProblemParams p2{2, 0.5};
    CHECK(std::abs(u_radial(p2, 1.0)) < 1e-15);
    CHECK(std::abs(u_radial(p2, 0.5) - boundary_data(p2).a) < 1e-14);

    const ProblemParams p3{3, 0.5};
    CHECK(std::abs(u_radial(p3, 1.0)) < 1e-15);
    CHECK(std::abs(u_radial(p3, 0.5) - 0.025) < 1e-14);
    // closed-form value evaluated with independent arithmetic
    CHECK(u_radial(p3, 0.75) == doctest::Approx(0.039583333333333331).epsilon(1e-14));

    CHECK_THROWS_AS(u_radial(p2, 0.4), std::invalid_argument);
    CHECK_THROWS_AS(u_radial(p2, 1.1), std::invalid_argument);
}

TEST_CASE("positivity of a and c across the parameter range") {
    for (int n = 2; n <= 6; ++n) {
        for (int i = 1; i <= 99; ++i) {
            const double lam = 0.01 * i;
            const RadialSolution s = boundary_data({n, lam});
            CHECK(s.a > 0.0);
            CHECK(s.c > 0.0);
        }
    }
}

TEST_CASE("interior positivity of the profile") {
    for (int n : {2, 3, 5}) {
        const ProblemParams p{n, 0.3};
        for (int i = 1; i < 50; ++i) {
            const double r = 0.3 + 0.7 * i / 50.0;
            CHECK(u_radial(p, r) > 0.0);
        }
    }
}

TEST_CASE("derivatives: Neumann identity, FD check, ODE residual") {
    for (int n : {2, 3, 4}) {
        for (double lam : {0.2, 0.5, 0.8}) {
            const ProblemParams p{n, lam};
            const RadialSolution sol = boundary_data(p);
            CHECK(u_radial_derivs(p, lam).du == doctest::Approx(sol.c).epsilon(1e-13));
            CHECK(-u_radial_derivs(p, 1.0).du == doctest::Approx(sol.c).epsilon(1e-13));

            const double h = 1e-5;
            for (int i = 1; i < 10; ++i) {
                const double r = lam + (1.0 - lam) * i / 10.0;
                const RadialDerivs d = u_radial_derivs(p, r);
                const double fd = (u_radial(p, r + h) - u_radial(p, r - h)) / (2.0 * h);
                CHECK(std::abs(fd - d.du) < 1e-8);
                // u'' + (n-1) u'/r + 1 = 0
                CHECK(std::abs(d.d2u + (n - 1) * d.du / r + 1.0) < 1e-12);
            }
        }
    }
    CHECK(u_radial_derivs({2, 0.5}, 1.0).du == doctest::Approx(-0.25).epsilon(1e-15));
}

TEST_CASE("ODE residual at 100 interior points") {
    const ProblemParams p{3, 0.4};
    for (int i = 1; i <= 100; ++i) {
        const double r = 0.4 + 0.6 * i / 101.0;
        const RadialDerivs d = u_radial_derivs(p, r);
        CHECK(std::abs(d.d2u + 2.0 * d.du / r + 1.0) < 1e-12);
    }
}
