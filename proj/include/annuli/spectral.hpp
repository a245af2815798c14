#pragma once

#include <Eigen/Dense>
#include <vector>

namespace annuli {

// Chebyshev-Gauss-Lobatto collocation on [0, 1]: nodes
// s_i = (1 - cos(pi i / N))/2, i = 0..N, ascending, and the corresponding
// differentiation matrix (negative-sum diagonal for stability).
std::vector<double> chebyshev_nodes_unit(int N);
Eigen::MatrixXd chebyshev_diff_unit(int N);

// Fourier collocation differentiation matrices on N uniform angles (N even).
// The second-derivative matrix is built directly rather than by squaring, so
// the sawtooth mode keeps its exact symbol.
Eigen::MatrixXd fourier_diff1(int N);
Eigen::MatrixXd fourier_diff2(int N);

}  // namespace annuli
