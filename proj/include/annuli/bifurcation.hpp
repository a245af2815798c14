#pragma once

#include <vector>

#include "annuli/modes.hpp"

namespace annuli {

// Zero crossing of the first eigenvalue branch mu_{m,1}(lambda) for a
// harmonic degree m >= 2. mu_{m,1} decreases strictly from m-1 at lambda=0+
// to -infinity at lambda=1-, so the crossing exists and is unique.
struct BifurcationValue {
    int n = 2;
    int degree = 2;            // harmonic degree m
    double lambda_star = 0.0;  // root of mu_{m,1}
    double residual = 0.0;     // |mu_{m,1}(lambda_star)|
};

// Bisection on [1e-6, 1-1e-6]; both the bracket width and |mu_{m,1}| are
// driven below tol. Throws ComputationError if the endpoints do not bracket
// a sign change or the tolerance is unreachable in double precision.
BifurcationValue find_lambda_star(int n, int degree, double tol);

// Degree i_k of the k-th symmetry-invariant harmonic for the reflection
// group fixed throughout (O(n-1) x Z_2; for n = 2 the invariants are
// cos(2k theta)). In every dimension the invariant degrees are the even
// ones, so i_k = 2k, and in particular i_1 >= 2: translational modes are
// excluded.
int g_invariant_degree(int n, int k);

struct BifurcationRow {
    int k;               // invariant mode index, 1-based
    int degree;          // i_k = 2k
    double lambda_star;
    double residual;
};

// lambda_k = lambda_{i_k}^* for k = 1..k_max; strictly increasing in k.
std::vector<BifurcationRow> bifurcation_table(int n, int k_max, double tol);

}  // namespace annuli
