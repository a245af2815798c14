#include <cmath>
#include <stdexcept>

#include "annuli/bifurcation.hpp"
#include "annuli/errors.hpp"
#include "doctest.h"

using namespace annuli;

TEST_CASE("degree-2 root in the bracketed interval") {
    const BifurcationValue v = find_lambda_star(2, 2, 1e-12);
    CHECK(v.lambda_star > 0.25);
    CHECK(v.lambda_star < 0.30);
    CHECK(v.residual < 1e-12);
    // root of mu_{2,1} for n = 2 is 2 - sqrt(3)
    CHECK(v.lambda_star == doctest::Approx(2.0 - std::sqrt(3.0)).epsilon(1e-10));

    CHECK(eigen_closed_form({2, 0.25}, 2.0).mu1 > 0.0);
    CHECK(eigen_closed_form({2, 0.30}, 2.0).mu1 < 0.0);

    // cross-check against the direct eigensolver at the root
    const EigenPair dir = eigen_direct(mode_matrix({2, v.lambda_star}, 2.0));
    CHECK(std::abs(dir.mu1) < 1e-10);
}

TEST_CASE("frozen roots for a few degrees") {
    CHECK(find_lambda_star(2, 3, 1e-12).lambda_star ==
          doctest::Approx(0.43542054468233905).epsilon(1e-10));
    CHECK(find_lambda_star(2, 4, 1e-12).lambda_star ==
          doctest::Approx(0.54183059880179066).epsilon(1e-10));
    CHECK(find_lambda_star(3, 2, 1e-12).lambda_star ==
          doctest::Approx(0.28397895098965613).epsilon(1e-10));
    CHECK(find_lambda_star(3, 4, 1e-12).lambda_star ==
          doctest::Approx(0.56127948416916826).epsilon(1e-10));
}

TEST_CASE("first branch is positive near lambda = 0") {
    for (int n : {2, 3, 5}) {
        const double mu = eigen_closed_form({n, 1e-6}, 2.0).mu1;
        CHECK(mu == doctest::Approx(1.0).epsilon(1e-3));
        CHECK(mu > 0.0);
    }
}

TEST_CASE("roots increase with the degree") {
    double prev = 0.0;
    for (int m = 2; m <= 40; ++m) {
        const BifurcationValue v = find_lambda_star(2, m, 1e-12);
        CHECK(v.lambda_star > prev);
        prev = v.lambda_star;
    }
    // reported, not asserted: the approach to 1 has no quantified rate
    MESSAGE("lambda* at degree 40 (n=2): ", prev);
}

TEST_CASE("uniqueness of the sign change on a fine scan") {
    for (int n : {2, 3}) {
        for (int m : {2, 5, 9}) {
            int changes = 0;
            double prev = eigen_closed_form({n, 1.0 / 201.0}, m).mu1;
            for (int i = 2; i <= 200; ++i) {
                const double lam = static_cast<double>(i) / 201.0;
                const double cur = eigen_closed_form({n, lam}, m).mu1;
                if (cur * prev < 0.0) ++changes;
                prev = cur;
            }
            CHECK(changes == 1);
        }
    }
}

TEST_CASE("invariant degrees of the reflection group") {
    CHECK(g_invariant_degree(2, 1) == 2);
    CHECK(g_invariant_degree(2, 3) == 6);
    CHECK(g_invariant_degree(5, 2) == 4);
    CHECK_THROWS_AS(g_invariant_degree(2, 0), std::invalid_argument);
}

TEST_CASE("bifurcation table") {
    const auto rows = bifurcation_table(2, 5, 1e-12);
    REQUIRE(rows.size() == 5);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].k == static_cast<int>(i) + 1);
        CHECK(rows[i].degree == 2 * rows[i].k);
        CHECK(rows[i].residual < 1e-12);
        if (i > 0) CHECK(rows[i].lambda_star > rows[i - 1].lambda_star);
    }

    const auto rows3 = bifurcation_table(3, 10, 1e-12);
    CHECK(rows3.back().lambda_star > rows3.front().lambda_star);
    CHECK(rows3.back().lambda_star < 1.0);

    CHECK_THROWS_AS(bifurcation_table(2, 0, 1e-12), std::invalid_argument);
    CHECK_THROWS_AS(find_lambda_star(2, 1, 1e-12), std::invalid_argument);
    CHECK_THROWS_AS(find_lambda_star(2, 2, -1.0), std::invalid_argument);
}
