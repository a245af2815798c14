#include "annuli/bifurcation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "annuli/errors.hpp"

namespace annuli {

BifurcationValue find_lambda_star(int n, int degree, double tol) {
    if (n < 2) throw std::invalid_argument("dimension n must be >= 2");
    if (degree < 2) {
        throw std::invalid_argument("bifurcation values exist for harmonic degree >= 2, got " +
                                    std::to_string(degree));
    }
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");

    const auto mu1 = [&](double lam) {
        return eigen_closed_form({n, lam}, static_cast<double>(degree)).mu1;
    };

    double lo = kLambdaMin;
    double hi = kLambdaMax;
    const double f_lo = mu1(lo);
    const double f_hi = mu1(hi);
    if (!(f_lo > 0.0 && f_hi < 0.0)) {
        throw ComputationError("find_lambda_star: no sign change of mu_{m,1} on [1e-6, 1-1e-6] "
                               "for degree " + std::to_string(degree));
    }

    double best_x = 0.5 * (lo + hi);
    double best_abs = std::abs(mu1(best_x));
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;  // bracket at machine resolution
        const double f_mid = mu1(mid);
        const double abs_mid = std::abs(f_mid);
        if (abs_mid < best_abs) {
            best_abs = abs_mid;
            best_x = mid;
        }
        if (f_mid > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo < tol && best_abs < tol) break;
    }
    if (!(hi - lo < tol && best_abs < tol)) {
        throw ComputationError("find_lambda_star: tolerance " + std::to_string(tol) +
                               " not reachable for degree " + std::to_string(degree));
    }
    return {n, degree, best_x, best_abs};
}

int g_invariant_degree(int n, int k) {
    if (n < 2) throw std::invalid_argument("dimension n must be >= 2");
    if (k < 1) throw std::invalid_argument("invariant mode index k must be >= 1");
    return 2 * k;
}

std::vector<BifurcationRow> bifurcation_table(int n, int k_max, double tol) {
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    std::vector<BifurcationRow> rows;
    rows.reserve(k_max);
    double prev = 0.0;
    for (int k = 1; k <= k_max; ++k) {
        const int degree = g_invariant_degree(n, k);
        const BifurcationValue v = find_lambda_star(n, degree, tol);
        if (!(v.lambda_star > prev)) {
            throw ComputationError("bifurcation_table: sequence failed to increase at k = " +
                                   std::to_string(k));
        }
        prev = v.lambda_star;
        rows.push_back({k, degree, v.lambda_star, v.residual});
    }
    return rows;
}

}  // namespace annuli
