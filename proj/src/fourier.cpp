#include "annuli/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace annuli {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double CosineSeries::eval(double theta) const {
    double sum = 0.0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        sum += coeffs[j] * std::cos(j * theta);
    }
    return sum;
}

double CosineSeries::deriv(double theta) const {
    double sum = 0.0;
    for (std::size_t j = 1; j < coeffs.size(); ++j) {
        sum -= coeffs[j] * j * std::sin(j * theta);
    }
    return sum;
}

double CosineSeries::deriv2(double theta) const {
    double sum = 0.0;
    for (std::size_t j = 1; j < coeffs.size(); ++j) {
        sum -= coeffs[j] * static_cast<double>(j) * j * std::cos(j * theta);
    }
    return sum;
}

bool CosineSeries::is_zero() const {
    for (double c : coeffs) {
        if (c != 0.0) return false;
    }
    return true;
}

FourierPerturbation FourierPerturbation::zero(int J) {
    if (J < 0) throw std::invalid_argument("mode count J must be >= 0");
    FourierPerturbation p;
    p.coeffs1.assign(J + 1, 0.0);
    p.coeffs2.assign(J + 1, 0.0);
    return p;
}

namespace {
CosineSeries expand_even(const std::vector<double>& even_coeffs) {
    CosineSeries s;
    if (even_coeffs.empty()) {
        s.coeffs = {0.0};
        return s;
    }
    s.coeffs.assign(2 * even_coeffs.size() - 1, 0.0);
    for (std::size_t j = 0; j < even_coeffs.size(); ++j) {
        s.coeffs[2 * j] = even_coeffs[j];
    }
    return s;
}
}  // namespace

CosineSeries FourierPerturbation::inner_series() const { return expand_even(coeffs1); }

CosineSeries FourierPerturbation::outer_series() const { return expand_even(coeffs2); }

int FourierPerturbation::modes() const {
    const std::size_t len = std::max(coeffs1.size(), coeffs2.size());
    return len == 0 ? 0 : static_cast<int>(len) - 1;
}

std::vector<double> uniform_angles(int count) {
    if (count < 1) throw std::invalid_argument("angle count must be >= 1");
    std::vector<double> theta(count);
    for (int j = 0; j < count; ++j) {
        theta[j] = kTwoPi * j / count;
    }
    return theta;
}

double integrate_periodic(const std::vector<double>& samples) {
    if (samples.empty()) throw std::invalid_argument("integrate_periodic: empty samples");
    double sum = 0.0;
    for (double v : samples) sum += v;
    return sum * kTwoPi / static_cast<double>(samples.size());
}

std::vector<double> cosine_coefficients(const std::vector<double>& samples, int max_mode) {
    const int count = static_cast<int>(samples.size());
    if (count < 2) throw std::invalid_argument("cosine_coefficients: need at least 2 samples");
    if (max_mode < 0 || max_mode > count / 2) {
        throw std::invalid_argument("cosine_coefficients: max_mode must be in [0, count/2]");
    }
    std::vector<double> coeffs(max_mode + 1, 0.0);
    for (int m = 0; m <= max_mode; ++m) {
        double sum = 0.0;
        for (int j = 0; j < count; ++j) {
            sum += samples[j] * std::cos(m * (kTwoPi * j / count));
        }
        // modes 0 and count/2 appear once in the discrete basis, others twice
        const double weight = (m == 0 || 2 * m == count) ? 1.0 : 2.0;
        coeffs[m] = weight * sum / count;
    }
    return coeffs;
}

double inner_product_weighted(const FourierPerturbation& w, const FourierPerturbation& z,
                              double lambda, int n) {
    constexpr double kPi = std::numbers::pi;
    const auto dot = [](const std::vector<double>& a, const std::vector<double>& b) {
        const std::size_t len = std::min(a.size(), b.size());
        double sum = 0.0;
        for (std::size_t j = 0; j < len; ++j) {
            // int cos(2j t) cos(2j t) dt = 2 pi for j = 0, pi otherwise
            sum += (j == 0 ? 2.0 * kPi : kPi) * a[j] * b[j];
        }
        return sum;
    };
    return std::pow(lambda, n - 1) * dot(w.coeffs1, z.coeffs1) + dot(w.coeffs2, z.coeffs2);
}

}  // namespace annuli
