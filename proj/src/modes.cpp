#include "annuli/modes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "annuli/errors.hpp"

namespace annuli {

namespace {

struct Hyperbolic {
    double coth;
    double inv_sinh;
};

// coth(w) and 1/sinh(w) for w > 0 computed through e^{-w} = lambda^alpha.
// Stable for w -> 0+ (expm1 keeps full relative precision) and for large w
// (e^{-w} underflows gracefully, so coth -> 1 and 1/sinh -> 0).
Hyperbolic stable_hyperbolic(double omega) {
    const double den = -std::expm1(-2.0 * omega);  // 1 - e^{-2w} in (0, 1]
    return {(2.0 - den) / den, 2.0 * std::exp(-omega) / den};
}

void check_degree(double k) {
    if (!(k >= 0.0)) {
        throw std::invalid_argument("harmonic degree k must be >= 0, got " + std::to_string(k));
    }
}

std::array<double, 2> eigenvector_for(double m11, double m12, double m22, double mu) {
    // (m12, mu - m11) and (mu - m22, m12) both span the eigenspace; pick the
    // better conditioned one
    const std::array<double, 2> cand_a{m12, mu - m11};
    const std::array<double, 2> cand_b{mu - m22, m12};
    const double na = std::hypot(cand_a[0], cand_a[1]);
    const double nb = std::hypot(cand_b[0], cand_b[1]);
    std::array<double, 2> v = (na >= nb) ? cand_a : cand_b;
    const double norm = std::hypot(v[0], v[1]);
    if (norm == 0.0) {
        return {1.0, 0.0};
    }
    v[0] /= norm;
    v[1] /= norm;
    if (v[0] < 0.0 || (v[0] == 0.0 && v[1] < 0.0)) {
        v[0] = -v[0];
        v[1] = -v[1];
    }
    return v;
}

// Ascending roots of lambda t^2 - C t + D = 0, pairing the quadratic formula
// with the product-of-roots form so neither root suffers cancellation.
std::array<double, 2> quadratic_roots(double lambda, double C, double D) {
    double disc = C * C - 4.0 * lambda * D;
    if (disc < 0.0) disc = 0.0;
    const double sq = std::sqrt(disc);
    if (C >= 0.0) {
        const double big = (C + sq) / (2.0 * lambda);
        const double small = (big == 0.0) ? 0.0 : D / (lambda * big);
        return {small, big};
    }
    const double small = (C - sq) / (2.0 * lambda);
    const double big = (small == 0.0) ? 0.0 : D / (lambda * small);
    return {small, big};
}

}  // namespace

ModeMatrix mode_matrix(const ProblemParams& params, double k) {
    params.validate();
    check_degree(k);
    const int n = params.n;
    const double lam = params.lambda;
    const double inv_c = 1.0 / boundary_data(params).c;

    ModeMatrix m;
    m.params = params;
    m.k = k;
    m.alpha = 0.5 * n + k - 1.0;
    m.cap_d = (n + k - 1.0) * (k - 1.0);
    if (n == 2 && k == 0.0) {
        // logarithmic subspace of the planar annulus
        const double il = 1.0 / std::log(lam);
        m.omega = 0.0;
        m.cap_c = -(lam + 1.0) * il + (lam - 1.0);
        m.m11 = -il / lam - 1.0 / lam - inv_c;
        m.m12 = il / std::sqrt(lam);
        m.m22 = -il + 1.0 - inv_c;
    } else {
        m.omega = -m.alpha * std::log(lam);
        const Hyperbolic h = stable_hyperbolic(m.omega);
        m.cap_c = m.alpha * (lam + 1.0) * h.coth + 0.5 * n * (lam - 1.0);
        m.m11 = (m.alpha * h.coth - 0.5 * n) / lam - inv_c;
        m.m12 = -m.alpha * h.inv_sinh / std::sqrt(lam);
        m.m22 = m.alpha * h.coth + 0.5 * n - inv_c;
    }
    return m;
}

HarmonicProfiles harmonic_radial_profiles(const ProblemParams& params, double k, double r) {
    params.validate();
    check_degree(k);
    const int n = params.n;
    const double lam = params.lambda;
    if (!(r >= lam - 1e-12 && r <= 1.0 + 1e-12)) {
        throw std::invalid_argument("radius r must lie in [lambda, 1]");
    }
    HarmonicProfiles p{};
    if (n == 2 && k == 0.0) {
        const double il = 1.0 / std::log(lam);
        const double head = 1.0 / std::sqrt(lam);
        p.A = head * std::log(r) * il;
        p.dA = head * il / r;
        p.B = 1.0 - std::log(r) * il;
        p.dB = -il / r;
        return p;
    }
    const double e1 = 2.0 - n - k;  // exponent of the decaying harmonic r^{2-n-k}
    const double e2 = k;
    const double den = std::pow(lam, e1) - std::pow(lam, e2);
    const double head = std::pow(lam, 0.5 * (1.0 - n));
    p.A = head * (std::pow(r, e1) - std::pow(r, e2)) / den;
    p.dA = head * (e1 * std::pow(r, e1 - 1.0) - e2 * std::pow(r, e2 - 1.0)) / den;
    p.B = (std::pow(lam, e1) * std::pow(r, e2) - std::pow(lam, e2) * std::pow(r, e1)) / den;
    p.dB = (std::pow(lam, e1) * e2 * std::pow(r, e2 - 1.0) -
            std::pow(lam, e2) * e1 * std::pow(r, e1 - 1.0)) /
           den;
    return p;
}

ModeMatrix mode_matrix_via_profiles(const ProblemParams& params, double k) {
    params.validate();
    check_degree(k);
    const int n = params.n;
    const double lam = params.lambda;
    const RadialSolution rad = boundary_data(params);
    const HarmonicProfiles inner = harmonic_radial_profiles(params, k, lam);
    const HarmonicProfiles outer = harmonic_radial_profiles(params, k, 1.0);
    const double d2u_inner = u_radial_derivs(params, lam).d2u;
    const double d2u_outer = u_radial_derivs(params, 1.0).d2u;
    const double head = std::pow(lam, 0.5 * (n - 1.0));  // undoes the e1 scaling

    ModeMatrix m;
    m.params = params;
    m.k = k;
    m.alpha = 0.5 * n + k - 1.0;
    m.omega = (n == 2 && k == 0.0) ? 0.0 : -m.alpha * std::log(lam);
    m.cap_d = (n + k - 1.0) * (k - 1.0);

    m.m11 = -inner.dA * head + d2u_inner / rad.c;
    const double m12_row1 = -inner.dB * head;
    const double m12_row2 = outer.dA;
    m.m22 = outer.dB + d2u_outer / rad.c;

    // the two off-diagonal routes (-B'(lambda) scaled, A'(1)) must coincide
    const double scale = std::max({1.0, std::abs(m12_row1), std::abs(m12_row2)});
    if (std::abs(m12_row1 - m12_row2) > 1e-9 * scale) {
        throw ComputationError("profile construction lost symmetry of the mode matrix");
    }
    m.m12 = m12_row2;

    // recover the trace auxiliary from the assembled entries
    m.cap_c = lam * ((m.m11 + 1.0 / rad.c) + (m.m22 + 1.0 / rad.c));
    return m;
}

EigenPair eigen_closed_form(const ProblemParams& params, double k) {
    const ModeMatrix m = mode_matrix(params, k);
    const double inv_c = 1.0 / boundary_data(params).c;
    const std::array<double, 2> t = quadratic_roots(params.lambda, m.cap_c, m.cap_d);
    EigenPair e;
    e.mu1 = t[0] - inv_c;
    e.mu2 = t[1] - inv_c;
    e.v1 = eigenvector_for(m.m11, m.m12, m.m22, e.mu1);
    e.v2 = eigenvector_for(m.m11, m.m12, m.m22, e.mu2);
    return e;
}

EigenPair eigen_direct(const ModeMatrix& mat) {
    const double mean = 0.5 * (mat.m11 + mat.m22);
    const double radius = std::hypot(0.5 * (mat.m11 - mat.m22), mat.m12);
    EigenPair e;
    e.mu1 = mean - radius;
    e.mu2 = mean + radius;
    e.v1 = eigenvector_for(mat.m11, mat.m12, mat.m22, e.mu1);
    e.v2 = eigenvector_for(mat.m11, mat.m12, mat.m22, e.mu2);
    return e;
}

std::vector<EigenBranchRow> eigen_branch_table(int n, const std::vector<double>& k_list,
                                               const std::vector<double>& lambda_grid) {
    if (k_list.empty()) {
        throw std::invalid_argument("eigen_branch_table: empty degree list");
    }
    if (lambda_grid.empty()) {
        throw std::invalid_argument("eigen_branch_table: empty lambda grid");
    }
    std::vector<EigenBranchRow> rows;
    rows.reserve(k_list.size() * 2 * lambda_grid.size());
    for (double k : k_list) {
        for (int j = 1; j <= 2; ++j) {
            for (double lam : lambda_grid) {
                const EigenPair e = eigen_closed_form({n, lam}, k);
                rows.push_back({k, j, lam, j == 1 ? e.mu1 : e.mu2});
            }
        }
    }
    return rows;
}

}  // namespace annuli
