#include "annuli/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace annuli {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::vector<double> chebyshev_nodes_unit(int N) {
    if (N < 1) throw std::invalid_argument("chebyshev_nodes_unit: N must be >= 1");
    std::vector<double> s(N + 1);
    for (int i = 0; i <= N; ++i) {
        s[i] = 0.5 * (1.0 - std::cos(kPi * i / N));
    }
    return s;
}

Eigen::MatrixXd chebyshev_diff_unit(int N) {
    if (N < 1) throw std::invalid_argument("chebyshev_diff_unit: N must be >= 1");
    // standard matrix on x_i = cos(pi i / N), then mapped by s = (1-x)/2
    std::vector<double> x(N + 1), c(N + 1);
    for (int i = 0; i <= N; ++i) {
        x[i] = std::cos(kPi * i / N);
        c[i] = (i == 0 || i == N) ? 2.0 : 1.0;
    }
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(N + 1, N + 1);
    for (int i = 0; i <= N; ++i) {
        for (int j = 0; j <= N; ++j) {
            if (i == j) continue;
            const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            D(i, j) = (c[i] / c[j]) * sign / (x[i] - x[j]);
        }
        double row_sum = 0.0;
        for (int j = 0; j <= N; ++j) {
            if (j != i) row_sum += D(i, j);
        }
        D(i, i) = -row_sum;
    }
    return -2.0 * D;  // d/ds = -2 d/dx
}

Eigen::MatrixXd fourier_diff1(int N) {
    if (N < 2 || N % 2 != 0) throw std::invalid_argument("fourier_diff1: N must be even, >= 2");
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(N, N);
    const double h = 2.0 * kPi / N;
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            if (i == j) continue;
            const int d = i - j;
            const double sign = (d % 2 == 0) ? 1.0 : -1.0;
            D(i, j) = 0.5 * sign / std::tan(0.5 * h * d);
        }
    }
    return D;
}

Eigen::MatrixXd fourier_diff2(int N) {
    if (N < 2 || N % 2 != 0) throw std::invalid_argument("fourier_diff2: N must be even, >= 2");
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(N, N);
    const double h = 2.0 * kPi / N;
    const double diag = -kPi * kPi / (3.0 * h * h) - 1.0 / 6.0;  // = -N^2/12 - 1/6
    for (int i = 0; i < N; ++i) {
        D(i, i) = diag;
        for (int j = 0; j < N; ++j) {
            if (i == j) continue;
            const int d = i - j;
            const double sign = (d % 2 == 0) ? 1.0 : -1.0;
            const double s = std::sin(0.5 * h * d);
            D(i, j) = -0.5 * sign / (s * s);
        }
    }
    return D;
}

}  // namespace annuli
