#pragma once

#include "annuli/annulus_pde.hpp"
#include "annuli/continuation.hpp"
#include "annuli/fourier.hpp"

namespace annuli {

// Perimeter and area of the perturbed annulus, from spectral quadrature of
// the boundary curves: P = sum of int sqrt(rho^2 + rho'^2) dtheta over both
// components, |Omega| = (1/2) int (rho_out^2 - rho_in^2) dtheta.
struct DomainGeometry {
    double perimeter = 0.0;
    double area = 0.0;
    double inner_length = 0.0;
    double outer_length = 0.0;
};

DomainGeometry perimeter_area(double lambda, const FourierPerturbation& perturbation,
                              int nodes = 256);

// Comparison of the perimeter-to-area ratio against 1/c for the measured
// Neumann constant c. On a domain solving the overdetermined problem the two
// coincide (the domain is its own Cheeger set), and the divergence identity
// |Omega| = c P holds with E = Omega.
struct CheegerReport {
    DomainGeometry geometry;
    double ratio = 0.0;    // P / |Omega|
    double inv_c = 0.0;
    double gap_abs = 0.0;  // |ratio - 1/c|
    double gap_rel = 0.0;
    double div_gap = 0.0;  // | |Omega| - c P |
};

CheegerReport cheeger_report(double lambda, const FourierPerturbation& perturbation, double c,
                             int nodes = 256);
CheegerReport cheeger_report(const BranchPoint& point, int nodes = 256);

// Interior gradient bound: |grad u| is subharmonic for unit forcing, so its
// maximum sits on the boundary where it equals the Neumann constant.
struct GradientBoundReport {
    double max_interior = 0.0;
    double max_boundary = 0.0;
    double c = 0.0;
    bool strictly_below = false;  // max_interior < c
};

GradientBoundReport gradient_bound_check(const DirichletSolution& sol, double c);

}  // namespace annuli
