#include <cmath>
#include <numbers>
#include <random>

#include "annuli/fourier.hpp"
#include "doctest.h"

using namespace annuli;

TEST_CASE("cosine coefficients recover a random even trig polynomial") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        CosineSeries s;
        s.coeffs.resize(9);
        for (double& c : s.coeffs) c = unif(rng);

        const int Nt = 64;
        std::vector<double> samples(Nt);
        const auto theta = uniform_angles(Nt);
        for (int j = 0; j < Nt; ++j) samples[j] = s.eval(theta[j]);

        const auto rec = cosine_coefficients(samples, 16);
        for (int m = 0; m <= 16; ++m) {
            const double expected = m < 9 ? s.coeffs[m] : 0.0;
            CHECK(std::abs(rec[m] - expected) < 1e-13);
        }
    }
}

TEST_CASE("series derivatives match finite differences") {
    CosineSeries s;
    s.coeffs = {0.3, 0.0, -0.2, 0.05, 0.0, 0.01};
    const double h1 = 1e-6, h2 = 1e-4;
    for (double th : {0.0, 0.7, 2.1, 5.0}) {
        const double fd1 = (s.eval(th + h1) - s.eval(th - h1)) / (2 * h1);
        const double fd2 = (s.eval(th + h2) - 2 * s.eval(th) + s.eval(th - h2)) / (h2 * h2);
        CHECK(std::abs(fd1 - s.deriv(th)) < 1e-8);
        CHECK(std::abs(fd2 - s.deriv2(th)) < 1e-6);
    }
}

TEST_CASE("even-mode expansion places coefficients at even frequencies") {
    FourierPerturbation p = FourierPerturbation::zero(2);
    p.coeffs1 = {0.1, 0.0, 0.3};  // 0.1 + 0.3 cos(4 theta)
    const CosineSeries s = p.inner_series();
    REQUIRE(s.coeffs.size() == 5);
    CHECK(s.coeffs[0] == 0.1);
    CHECK(s.coeffs[2] == 0.0);
    CHECK(s.coeffs[4] == 0.3);
    CHECK(s.eval(0.0) == doctest::Approx(0.4));
}

TEST_CASE("weighted inner product of pure modes") {
    constexpr double pi = std::numbers::pi;
    FourierPerturbation w = FourierPerturbation::zero(3);
    FourierPerturbation z = FourierPerturbation::zero(3);
    w.coeffs1[1] = 2.0;  // 2 cos(2 theta) on the inner component
    z.coeffs1[1] = 0.5;
    z.coeffs2[2] = 1.0;
    // only the shared inner mode contributes: lambda * pi * 2 * 0.5
    CHECK(inner_product_weighted(w, z, 0.25) == doctest::Approx(0.25 * pi).epsilon(1e-14));

    w.coeffs2[2] = -3.0;
    CHECK(inner_product_weighted(w, z, 0.25) ==
          doctest::Approx(0.25 * pi - 3.0 * pi).epsilon(1e-14));

    // mode-0 entries carry the full-circle weight
    FourierPerturbation u0 = FourierPerturbation::zero(0);
    u0.coeffs1[0] = 1.0;
    CHECK(inner_product_weighted(u0, u0, 0.5) == doctest::Approx(0.5 * 2.0 * pi).epsilon(1e-14));
}

TEST_CASE("trapezoid integration is exact for resolved modes") {
    const int Nt = 32;
    const auto theta = uniform_angles(Nt);
    std::vector<double> samples(Nt);
    for (int j = 0; j < Nt; ++j) samples[j] = 1.0 + std::cos(3.0 * theta[j]);
    CHECK(integrate_periodic(samples) == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-14));
}
