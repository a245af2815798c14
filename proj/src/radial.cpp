#include "annuli/radial.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace annuli {

void ProblemParams::validate() const {
    if (n < 2) {
        throw std::invalid_argument("dimension n must be >= 2, got " + std::to_string(n));
    }
    if (!(lambda >= kLambdaMin && lambda <= kLambdaMax)) {
        throw std::invalid_argument("inner radius lambda must lie in [1e-6, 1-1e-6], got " +
                                    std::to_string(lambda));
    }
}

namespace {

void check_radius(const ProblemParams& p, double r) {
    // allow a few ulps of slack so mapped-grid boundary nodes are accepted
    if (!(r >= p.lambda - 1e-12 && r <= 1.0 + 1e-12)) {
        throw std::invalid_argument("radius r must lie in [lambda, 1], got " + std::to_string(r));
    }
}

// integration constant of u'(r) = C/r^{n-1} - r/n
double first_integral_constant(int n, double lambda) {
    return (1.0 + lambda) / (n * (1.0 + std::pow(lambda, 1.0 - n)));
}

}  // namespace

RadialSolution boundary_data(const ProblemParams& params) {
    params.validate();
    const int n = params.n;
    const double lam = params.lambda;
    RadialSolution sol;
    sol.params = params;
    sol.c = (1.0 - std::pow(lam, n)) / (n * (1.0 + std::pow(lam, n - 1)));
    if (n == 2) {
        sol.a = 0.5 * lam * std::log(lam) + 0.25 * (1.0 - lam * lam);
    } else {
        sol.a = (lam / n) * (std::pow(lam, n - 2) - 1.0) / (n - 2) * (1.0 + lam) /
                    (1.0 + std::pow(lam, n - 1)) +
                (1.0 - lam * lam) / (2.0 * n);
    }
    return sol;
}

double u_radial(const ProblemParams& params, double r) {
    params.validate();
    check_radius(params, r);
    const int n = params.n;
    const double lam = params.lambda;
    if (n == 2) {
        return 0.5 * lam * std::log(r) + 0.25 * (1.0 - r * r);
    }
    return std::pow(lam, n - 1) / (n * (n - 2.0)) * (1.0 + lam) / (1.0 + std::pow(lam, n - 1)) *
               (1.0 - std::pow(r, 2.0 - n)) +
           (1.0 - r * r) / (2.0 * n);
}

RadialDerivs u_radial_derivs(const ProblemParams& params, double r) {
    params.validate();
    check_radius(params, r);
    const int n = params.n;
    const double c = first_integral_constant(n, params.lambda);
    RadialDerivs d;
    d.du = c / std::pow(r, n - 1) - r / n;
    d.d2u = -1.0 - (n - 1) * d.du / r;
    return d;
}

}  // namespace annuli
