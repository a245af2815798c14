#pragma once

#include <string>
#include <vector>

#include "annuli/annulus_pde.hpp"
#include "annuli/fourier.hpp"

namespace annuli {

// Unit kernel direction of the degree-m mode matrix at a bifurcation value:
// coordinates (a1, a2) in the boundary basis {e1, e2}, which is orthonormal
// for the surface-measure inner product, so Euclidean normalization of the
// coordinates is exactly unit weighted norm of the pair. First coordinate
// positive.
struct TangentVector {
    int mode = 2;              // harmonic degree m = i_k (even, >= 2)
    double lambda_star = 0.0;
    double a1 = 1.0, a2 = 0.0;

    // The tangent as a boundary perturbation pair:
    //   z = (a1 lambda^{-1/2} Ybar_m, a2 Ybar_m), Ybar_m = cos(m theta)/sqrt(pi).
    FourierPerturbation shape() const;
};

// Throws if mu_{m,1}(lambda_star) is not numerically zero (bad input).
TangentVector tangent_vector(double lambda_star, int degree_m);

// One solution of F_lambda(s (z + w)) = 0 on the branch through a bifurcation
// value: amplitude s, continued parameter lambda(s), and the correction w(s)
// orthogonal to the tangent in the weighted inner product at lambda_star.
struct BranchPoint {
    double s = 0.0;
    double lambda = 0.0;
    int mode = 2;
    FourierPerturbation w;   // correction, <w, z>_{lambda*} = 0
    FourierPerturbation v;   // s (z + w), the actual domain perturbation
    double residual_sup = 0.0;     // sup |F| over both boundaries
    double neumann_constant = 0.0; // pooled boundary mean of du/dnu
    double inner_dirichlet = 0.0;  // a at lambda(s)
    double ortho = 0.0;            // <w, z>_{lambda*} as reconstructed
    bool converged = false;
    int newton_iters = 0;
    std::string message;
};

struct ContinuationConfig {
    int Nr = 24;
    int Nt = 48;
    int J = 8;              // retained even cosine modes per boundary
    double tol = 1e-8;      // target sup |F|
    int max_newton = 30;
    double fd_step = 1e-6;  // Jacobian differencing step
    double max_amplitude_factor = 0.05;  // |s| <= factor * (1 - lambda_star)
};

// Damped Newton on the unknowns (w-coefficients with the orthogonality
// constraint eliminating one scalar, and lambda) at fixed amplitude s. The
// equations are the retained even cosine coefficients of both components of
// F. `init` warm-starts from a neighbouring branch point; null starts from
// the trivial state (w = 0, lambda = lambda_star). Non-convergence is
// reported in the returned point, not thrown.
BranchPoint newton_solve_branch_point(const TangentVector& tangent, double s,
                                      const BranchPoint* init, const ContinuationConfig& config);

// Warm-started sweep over amplitudes (sorted by |s|, each sign chained
// separately). Stops after the first non-convergent point; that point is
// included as the diagnostic tail.
std::vector<BranchPoint> continue_branch(const TangentVector& tangent,
                                         const std::vector<double>& s_list,
                                         const ContinuationConfig& config);

// Re-solves the Dirichlet problem on the point's domain and reports how well
// the single-constant Neumann condition holds, plus positivity and the
// nontriviality certificate (the degree-m cosine content of v).
struct OverdeterminedReport {
    double c = 0.0;  // pooled arclength-weighted boundary constant
    double inner_mean = 0.0, outer_mean = 0.0;
    double inner_max_dev = 0.0, outer_max_dev = 0.0;  // max |trace - c|
    double max_joint_dev = 0.0;
    double inner_dirichlet = 0.0;
    double u_min_interior = 0.0;
    bool u_positive = false;
    double v_mode_coeff_inner = 0.0, v_mode_coeff_outer = 0.0;
    bool nontrivial = false;
    double grad_max_interior = 0.0;
    double grad_max_boundary = 0.0;
    bool grad_bound_ok = false;
};

OverdeterminedReport verify_overdetermined(const BranchPoint& point,
                                           const ContinuationConfig& config);

}  // namespace annuli
