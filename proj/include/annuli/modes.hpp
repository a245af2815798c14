#pragma once

#include <array>
#include <vector>

#include "annuli/radial.hpp"

namespace annuli {

// 2x2 matrix of the linearized Neumann-deviation operator restricted to the
// degree-k harmonic subspace, expressed in the boundary basis
//   e1 = (lambda^{(1-n)/2} Y, 0),  e2 = (0, Y),
// which is orthonormal for the surface-measure inner product on the two
// boundary spheres. With alpha = n/2 + k - 1 and omega = -alpha log(lambda),
//
//   M + (1/c_lambda) id = [ (alpha coth w - n/2)/lambda   -alpha/(sqrt(l) sinh w) ]
//                         [ -alpha/(sqrt(l) sinh w)        alpha coth w + n/2     ]
//
// The degree k is accepted as a real >= 0 (continuous extension); integer k
// is the standard use. The n = 2, k = 0 subspace is logarithmic and has its
// own entries; it is the continuous limit k -> 0+ of the formula above.
struct ModeMatrix {
    ProblemParams params;
    double k = 0.0;
    double m11 = 0.0, m12 = 0.0, m22 = 0.0;  // symmetric, m12 != 0 on (0,1)
    double alpha = 0.0;                      // n/2 + k - 1
    double omega = 0.0;                      // -alpha log(lambda); 0 for n=2, k=0
    double cap_c = 0.0;                      // alpha (lambda+1) coth(omega) + n/2 (lambda-1)
    double cap_d = 0.0;                      // alpha^2 - n^2/4 = (n+k-1)(k-1)
};

// Eigen-decomposition of a ModeMatrix: mu1 < mu2 strictly (the off-diagonal
// entry never vanishes), eigenvectors of unit Euclidean norm with positive
// first entry.
struct EigenPair {
    double mu1 = 0.0, mu2 = 0.0;
    std::array<double, 2> v1{1.0, 0.0};
    std::array<double, 2> v2{0.0, 1.0};
};

ModeMatrix mode_matrix(const ProblemParams& params, double k);

// Harmonic radial interpolation profiles for degree k:
//   A(lambda) = lambda^{(1-n)/2}, A(1) = 0, B(lambda) = 0, B(1) = 1,
// so that (a A(r) + b B(r)) Y(theta) is the harmonic extension of boundary
// data a e1 + b e2. dA, dB are the exact radial derivatives.
struct HarmonicProfiles {
    double A, B, dA, dB;
};

HarmonicProfiles harmonic_radial_profiles(const ProblemParams& params, double k, double r);

// Independent construction of the mode matrix from the boundary derivatives
// of the harmonic profiles and the radial second derivative. Serves as an
// entrywise oracle for mode_matrix.
ModeMatrix mode_matrix_via_profiles(const ProblemParams& params, double k);

// Eigenvalues from the quadratic lambda t^2 - C t + D = 0 shifted by
// -1/c_lambda. The small root is evaluated as 2D/(C + sqrt(C^2 - 4 lambda D))
// to avoid cancellation; the discriminant is clamped at zero (it is a square
// plus a positive term analytically, and D = 0 exactly at k = 1).
EigenPair eigen_closed_form(const ProblemParams& params, double k);

// Brute-force symmetric 2x2 eigensolver (half-trace +- radius form of the
// characteristic polynomial). Oracle for eigen_closed_form.
EigenPair eigen_direct(const ModeMatrix& mat);

struct EigenBranchRow {
    double k;
    int j;  // branch index, 1 or 2
    double lambda;
    double mu;
};

// Rows (k, j, lambda, mu_{k,j}(lambda)) ordered by (k, j, lambda).
std::vector<EigenBranchRow> eigen_branch_table(int n, const std::vector<double>& k_list,
                                               const std::vector<double>& lambda_grid);

}  // namespace annuli
