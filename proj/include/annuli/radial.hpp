#pragma once

namespace annuli {

// Admissible range for the inner radius. The closed forms degenerate
// (logarithmically or by vanishing gap) at 0 and 1, so public entry points
// stay strictly inside.
inline constexpr double kLambdaMin = 1e-6;
inline constexpr double kLambdaMax = 1.0 - 1e-6;

// Ambient dimension n >= 2 and inner radius of the reference annulus
// {x : lambda < |x| < 1}.
struct ProblemParams {
    int n = 2;
    double lambda = 0.5;

    void validate() const;  // throws std::invalid_argument
};

// Boundary data of the radial solution of -Delta u = 1 on the annulus whose
// normal derivative (inner normal) equals the same constant c on both
// boundary spheres: u = 0 on |x| = 1, u = a on |x| = lambda.
struct RadialSolution {
    ProblemParams params;
    double a = 0.0;  // inner Dirichlet value, positive on (0,1)
    double c = 0.0;  // Neumann constant, c = (1 - lambda^n) / (n (1 + lambda^{n-1}))
};

RadialSolution boundary_data(const ProblemParams& params);

// Radial profile u(r) on [lambda, 1]:
//   n = 2:   u = (lambda/2) log r + (1 - r^2)/4
//   n >= 3:  u = lambda^{n-1}/(n(n-2)) (1+lambda)/(1+lambda^{n-1}) (1 - r^{2-n})
//            + (1 - r^2)/(2n)
double u_radial(const ProblemParams& params, double r);

struct RadialDerivs {
    double du;   // u'(r) = C / r^{n-1} - r/n with C = (1+lambda)/(n(1+lambda^{1-n}))
    double d2u;  // u''(r) = -1 - (n-1) u'(r) / r
};

RadialDerivs u_radial_derivs(const ProblemParams& params, double r);

}  // namespace annuli
