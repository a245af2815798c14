#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "annuli/fourier.hpp"
#include "annuli/radial.hpp"

namespace annuli {

// Collocation grid for the planar annular region
//   rho_in(theta) < r < rho_out(theta),
//   rho_in = lambda + v1(theta), rho_out = 1 - v2(theta),
// pulled back to the strip (s, theta) in [0,1] x [0, 2 pi) by the linear
// radial blend r(s, theta) = rho_in (1-s) + rho_out s. The blend is a global
// diffeomorphism whenever the curves are admissible (rho_in > 0 and
// rho_in < rho_out everywhere), and the Neumann-deviation map depends only on
// the domain, not on the chart.
//
// s runs over Chebyshev-Gauss-Lobatto points (s_0 = 0 on the inner boundary),
// theta over Nt uniform angles. All chart derivatives entering the mapped
// Laplacian are evaluated analytically from the cosine series of the curves.
struct MappedAnnulusGrid {
    double lambda = 0.5;
    FourierPerturbation perturbation;  // even-mode form when built from one
    CosineSeries v1, v2;               // curves actually discretized
    int Nr = 0;                        // radial index runs 0..Nr
    int Nt = 0;                        // angular index runs 0..Nt-1

    std::vector<double> s;      // Nr+1 nodes
    std::vector<double> theta;  // Nt nodes
    std::vector<double> rho_in, rho_out;    // curve samples, per angle
    std::vector<double> width;              // rho_out - rho_in, per angle
    std::vector<double> r;                  // node radii, idx = i*Nt + j
    std::vector<double> s_theta;            // d s / d theta at fixed r
    std::vector<double> s_theta_theta;
    Eigen::MatrixXd Ds, Ds2;  // Chebyshev differentiation in s
    Eigen::MatrixXd Dt, Dt2;  // Fourier differentiation in theta

    int index(int i, int j) const { return i * Nt + j; }
};

MappedAnnulusGrid build_grid(double lambda, const FourierPerturbation& perturbation, int Nr,
                             int Nt);

// General-curve variant; used internally for validation directions that are
// not reflection-invariant (odd cosine modes).
MappedAnnulusGrid build_grid_curves(double lambda, const CosineSeries& v1, const CosineSeries& v2,
                                    int Nr, int Nt);

// Boundary function of theta: samples on the Nt uniform angles plus the
// cosine coefficients 0..Nt/2.
struct TraceFunction {
    std::vector<double> samples;
    std::vector<double> cosine;
};

struct DirichletSolution {
    MappedAnnulusGrid grid;
    double inner_value = 0.0;   // Dirichlet datum a on the inner boundary
    Eigen::MatrixXd u;          // (Nr+1) x Nt node values
    TraceFunction inner_trace;  // normal derivative (inner normal) per boundary
    TraceFunction outer_trace;
    double residual_rel = 0.0;  // relative interior residual of the linear solve
};

// Solves -Laplace(u) = 1 on the mapped domain with u = a on the inner
// boundary and u = 0 on the outer one, by dense collocation of the
// chain-rule Laplacian. Normal-derivative traces are extracted from the
// gradient magnitude, which on a boundary of constant u equals
// |du/dnu|; the solution exceeds its boundary data just inside, so the
// inner-normal derivative is +|grad u| on both components.
DirichletSolution solve_dirichlet(const MappedAnnulusGrid& grid, double a);

std::pair<TraceFunction, TraceFunction> normal_derivative_traces(const DirichletSolution& sol);

// |grad u| at every collocation node.
Eigen::MatrixXd gradient_magnitude(const DirichletSolution& sol);

// Arclength-weighted mean of the normal derivative over both boundary
// components pooled; the single constant the overdetermined condition asks
// for. The per-component means are also exposed.
struct BoundaryMeans {
    double inner_mean = 0.0;
    double outer_mean = 0.0;
    double pooled = 0.0;
    double inner_length = 0.0;
    double outer_length = 0.0;
};
BoundaryMeans boundary_trace_means(const DirichletSolution& sol);

// Normalized Neumann deviation of the perturbed domain:
//   F1 = (du/dnu|_inner - c_lambda)/c_lambda,  F2 likewise on the outer
// boundary, with the inner Dirichlet datum a_lambda. The perturbed domain
// solves the overdetermined problem exactly when F vanishes.
struct OverdeterminedResidual {
    std::vector<double> theta;
    std::vector<double> F1, F2;
    DirichletSolution solution;

    double sup_norm() const;
};

OverdeterminedResidual evaluate_F(double lambda, const FourierPerturbation& perturbation, int Nr,
                                  int Nt);
OverdeterminedResidual evaluate_F_curves(double lambda, const CosineSeries& v1,
                                         const CosineSeries& v2, int Nr, int Nt);

// Central finite differences of evaluate_F at v = 0 in the two basis
// directions of the degree-m harmonic subspace,
//   e1 = (lambda^{-1/2} Ybar_m, 0),  e2 = (0, Ybar_m),
// Ybar_m = cos(m theta)/sqrt(pi) (m >= 1) or 1/sqrt(2 pi) (m = 0), followed
// by projection back onto the basis in the surface-measure inner product.
// Approximates the degree-m mode matrix; odd m is allowed for validation.
Eigen::Matrix2d linearization_fd(double lambda, int degree_m, double h, int Nr, int Nt);

}  // namespace annuli
