#pragma once

#include <vector>

namespace annuli {

// Cosine polynomial f(theta) = sum_j coeffs[j] cos(j theta).
struct CosineSeries {
    std::vector<double> coeffs;

    double eval(double theta) const;
    double deriv(double theta) const;   // -sum j c_j sin(j theta)
    double deriv2(double theta) const;  // -sum j^2 c_j cos(j theta)
    int degree() const { return coeffs.empty() ? 0 : static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const;
};

// Boundary perturbation pair restricted to the reflection-invariant modes:
// only even cosine frequencies are representable,
//   v_i(theta) = sum_{j=0..J} coeffs_i[j] cos(2 j theta).
// Component 1 displaces the inner boundary outward (radius lambda + v1),
// component 2 displaces the outer boundary inward (radius 1 - v2).
struct FourierPerturbation {
    std::vector<double> coeffs1;
    std::vector<double> coeffs2;

    static FourierPerturbation zero(int J = 0);
    CosineSeries inner_series() const;  // even-mode expansion of v1
    CosineSeries outer_series() const;
    int modes() const;                  // J, the largest retained even-mode index
};

// Uniform angular grid theta_j = 2 pi j / count.
std::vector<double> uniform_angles(int count);

// Trapezoid rule over the full circle; spectrally exact for smooth periodic
// samples on the uniform grid.
double integrate_periodic(const std::vector<double>& samples);

// Cosine coefficients c_0..c_max_mode of uniformly sampled periodic data, so
// that f ~ sum c_m cos(m theta). Requires max_mode <= count/2.
std::vector<double> cosine_coefficients(const std::vector<double>& samples, int max_mode);

// Surface-measure inner product of two perturbation pairs on the boundary of
// the annulus with inner radius lambda (dimension n):
//   <w, z> = lambda^{n-1} int w1 z1 + int w2 z2.
double inner_product_weighted(const FourierPerturbation& w, const FourierPerturbation& z,
                              double lambda, int n = 2);

}  // namespace annuli
