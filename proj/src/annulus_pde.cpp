#include "annuli/annulus_pde.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "annuli/errors.hpp"
#include "annuli/spectral.hpp"

namespace annuli {

namespace {

constexpr double kPi = std::numbers::pi;

void check_sizes(int Nr, int Nt) {
    if (Nr < 8) throw std::invalid_argument("Nr must be >= 8");
    if (Nt < 8 || Nt % 2 != 0) throw std::invalid_argument("Nt must be even and >= 8");
}

// Normalized degree-m harmonic on the circle, unit L^2 norm.
CosineSeries normalized_harmonic(int m) {
    CosineSeries y;
    y.coeffs.assign(m + 1, 0.0);
    y.coeffs[m] = (m == 0) ? 1.0 / std::sqrt(2.0 * kPi) : 1.0 / std::sqrt(kPi);
    return y;
}

CosineSeries scaled(const CosineSeries& s, double factor) {
    CosineSeries out = s;
    for (double& c : out.coeffs) c *= factor;
    return out;
}

}  // namespace

MappedAnnulusGrid build_grid_curves(double lambda, const CosineSeries& v1, const CosineSeries& v2,
                                    int Nr, int Nt) {
    ProblemParams{2, lambda}.validate();
    check_sizes(Nr, Nt);

    // admissibility on a fine angular grid: the inner curve must stay away
    // from the origin and below the outer curve
    const int fine = std::max(512, 8 * Nt);
    for (int j = 0; j < fine; ++j) {
        const double th = 2.0 * kPi * j / fine;
        const double rin = lambda + v1.eval(th);
        const double rout = 1.0 - v2.eval(th);
        if (!(rin > 0.0)) {
            throw std::invalid_argument("inadmissible perturbation: inner curve reaches the origin");
        }
        if (!(rout > rin)) {
            throw std::invalid_argument("inadmissible perturbation: boundary curves cross");
        }
    }

    MappedAnnulusGrid g;
    g.lambda = lambda;
    g.v1 = v1;
    g.v2 = v2;
    g.Nr = Nr;
    g.Nt = Nt;
    g.s = chebyshev_nodes_unit(Nr);
    g.theta = uniform_angles(Nt);
    g.Ds = chebyshev_diff_unit(Nr);
    g.Ds2 = g.Ds * g.Ds;
    g.Dt = fourier_diff1(Nt);
    g.Dt2 = fourier_diff2(Nt);

    g.rho_in.resize(Nt);
    g.rho_out.resize(Nt);
    g.width.resize(Nt);
    std::vector<double> drin(Nt), drout(Nt), d2rin(Nt), d2rout(Nt);
    for (int j = 0; j < Nt; ++j) {
        const double th = g.theta[j];
        g.rho_in[j] = lambda + v1.eval(th);
        g.rho_out[j] = 1.0 - v2.eval(th);
        g.width[j] = g.rho_out[j] - g.rho_in[j];
        drin[j] = v1.deriv(th);
        drout[j] = -v2.deriv(th);
        d2rin[j] = v1.deriv2(th);
        d2rout[j] = -v2.deriv2(th);
    }

    const int nodes = (Nr + 1) * Nt;
    g.r.resize(nodes);
    g.s_theta.resize(nodes);
    g.s_theta_theta.resize(nodes);
    for (int i = 0; i <= Nr; ++i) {
        const double si = g.s[i];
        for (int j = 0; j < Nt; ++j) {
            const int idx = g.index(i, j);
            const double d = g.width[j];
            const double dd = drout[j] - drin[j];
            const double d2d = d2rout[j] - d2rin[j];
            g.r[idx] = g.rho_in[j] * (1.0 - si) + g.rho_out[j] * si;
            // s(r, theta) = (r - rho_in)/d; derivatives at fixed r
            const double st = -(drin[j] + si * dd) / d;
            g.s_theta[idx] = st;
            g.s_theta_theta[idx] = -(d2rin[j] + si * d2d) / d - 2.0 * st * dd / d;
        }
    }
    return g;
}

MappedAnnulusGrid build_grid(double lambda, const FourierPerturbation& perturbation, int Nr,
                             int Nt) {
    MappedAnnulusGrid g =
        build_grid_curves(lambda, perturbation.inner_series(), perturbation.outer_series(), Nr, Nt);
    g.perturbation = perturbation;
    return g;
}

DirichletSolution solve_dirichlet(const MappedAnnulusGrid& grid, double a) {
    const int Nr = grid.Nr, Nt = grid.Nt;
    const int n_nodes = (Nr + 1) * Nt;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n_nodes, n_nodes);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n_nodes);

    for (int j = 0; j < Nt; ++j) {
        const int inner = grid.index(0, j);
        A(inner, inner) = 1.0;
        rhs(inner) = a;
        const int outer = grid.index(Nr, j);
        A(outer, outer) = 1.0;
        rhs(outer) = 0.0;
    }

    // mapped Laplacian: with d = rho_out - rho_in and st = ds/dtheta|_r,
    //   Lap u = U_ss (1/d^2 + st^2/r^2) + U_stheta (2 st / r^2)
    //         + U_thetatheta / r^2 + U_s (1/(r d) + s_thetatheta / r^2)
    for (int i = 1; i < Nr; ++i) {
        for (int j = 0; j < Nt; ++j) {
            const int row = grid.index(i, j);
            const double r = grid.r[row];
            const double d = grid.width[j];
            const double st = grid.s_theta[row];
            const double stt = grid.s_theta_theta[row];
            const double r2 = r * r;
            const double c_ss = 1.0 / (d * d) + st * st / r2;
            const double c_st = 2.0 * st / r2;
            const double c_tt = 1.0 / r2;
            const double c_s = 1.0 / (r * d) + stt / r2;

            for (int ii = 0; ii <= Nr; ++ii) {
                A(row, grid.index(ii, j)) += c_ss * grid.Ds2(i, ii) + c_s * grid.Ds(i, ii);
            }
            for (int jj = 0; jj < Nt; ++jj) {
                A(row, grid.index(i, jj)) += c_tt * grid.Dt2(j, jj);
            }
            if (c_st != 0.0) {
                for (int ii = 0; ii <= Nr; ++ii) {
                    const double w = c_st * grid.Ds(i, ii);
                    for (int jj = 0; jj < Nt; ++jj) {
                        A(row, grid.index(ii, jj)) += w * grid.Dt(j, jj);
                    }
                }
            }
            rhs(row) = -1.0;
        }
    }

    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    const Eigen::VectorXd sol = lu.solve(rhs);

    // interior residual relative to the unit forcing
    const Eigen::VectorXd resid = A * sol - rhs;
    double res_max = 0.0;
    for (int i = 1; i < Nr; ++i) {
        for (int j = 0; j < Nt; ++j) {
            res_max = std::max(res_max, std::abs(resid(grid.index(i, j))));
        }
    }
    if (!(res_max < 1e-6) || !sol.allFinite()) {
        throw ComputationError("solve_dirichlet: linear system is singular or badly conditioned");
    }

    DirichletSolution out;
    out.grid = grid;
    out.inner_value = a;
    out.u.resize(Nr + 1, Nt);
    for (int i = 0; i <= Nr; ++i) {
        for (int j = 0; j < Nt; ++j) {
            out.u(i, j) = sol(grid.index(i, j));
        }
    }
    out.residual_rel = res_max;

    // boundary traces from the gradient magnitude: u is constant along each
    // boundary, so |grad u| there is the full normal derivative
    const Eigen::MatrixXd Us = grid.Ds * out.u;
    const Eigen::MatrixXd Ut = out.u * grid.Dt.transpose();
    const auto trace_at = [&](int i, const std::vector<double>& rho) {
        TraceFunction t;
        t.samples.resize(Nt);
        for (int j = 0; j < Nt; ++j) {
            const double d = grid.width[j];
            const double st = grid.s_theta[grid.index(i, j)];
            const double u_r = Us(i, j) / d;
            const double u_t = Ut(i, j) + Us(i, j) * st;
            t.samples[j] = std::hypot(u_r, u_t / rho[j]);
        }
        t.cosine = cosine_coefficients(t.samples, Nt / 2);
        return t;
    };
    out.inner_trace = trace_at(0, grid.rho_in);
    out.outer_trace = trace_at(Nr, grid.rho_out);
    return out;
}

std::pair<TraceFunction, TraceFunction> normal_derivative_traces(const DirichletSolution& sol) {
    return {sol.inner_trace, sol.outer_trace};
}

Eigen::MatrixXd gradient_magnitude(const DirichletSolution& sol) {
    const MappedAnnulusGrid& g = sol.grid;
    const Eigen::MatrixXd Us = g.Ds * sol.u;
    const Eigen::MatrixXd Ut = sol.u * g.Dt.transpose();
    Eigen::MatrixXd mag(g.Nr + 1, g.Nt);
    for (int i = 0; i <= g.Nr; ++i) {
        for (int j = 0; j < g.Nt; ++j) {
            const int idx = g.index(i, j);
            const double u_r = Us(i, j) / g.width[j];
            const double u_t = Ut(i, j) + Us(i, j) * g.s_theta[idx];
            mag(i, j) = std::hypot(u_r, u_t / g.r[idx]);
        }
    }
    return mag;
}

BoundaryMeans boundary_trace_means(const DirichletSolution& sol) {
    const MappedAnnulusGrid& g = sol.grid;
    const auto weighted = [&](const TraceFunction& t, const CosineSeries& v, bool inner) {
        // arclength element sqrt(rho^2 + rho'^2) d theta
        double len = 0.0, integral = 0.0;
        for (int j = 0; j < g.Nt; ++j) {
            const double th = g.theta[j];
            const double rho = inner ? g.rho_in[j] : g.rho_out[j];
            const double drho = inner ? v.deriv(th) : -v.deriv(th);
            const double ds = std::hypot(rho, drho);
            len += ds;
            integral += t.samples[j] * ds;
        }
        const double h = 2.0 * kPi / g.Nt;
        return std::pair<double, double>{integral * h, len * h};
    };
    const auto [in_int, in_len] = weighted(sol.inner_trace, g.v1, true);
    const auto [out_int, out_len] = weighted(sol.outer_trace, g.v2, false);
    BoundaryMeans m;
    m.inner_mean = in_int / in_len;
    m.outer_mean = out_int / out_len;
    m.pooled = (in_int + out_int) / (in_len + out_len);
    m.inner_length = in_len;
    m.outer_length = out_len;
    return m;
}

double OverdeterminedResidual::sup_norm() const {
    double sup = 0.0;
    for (double v : F1) sup = std::max(sup, std::abs(v));
    for (double v : F2) sup = std::max(sup, std::abs(v));
    return sup;
}

OverdeterminedResidual evaluate_F_curves(double lambda, const CosineSeries& v1,
                                         const CosineSeries& v2, int Nr, int Nt) {
    const RadialSolution rad = boundary_data({2, lambda});
    const MappedAnnulusGrid grid = build_grid_curves(lambda, v1, v2, Nr, Nt);
    DirichletSolution sol = solve_dirichlet(grid, rad.a);

    OverdeterminedResidual out;
    out.theta = grid.theta;
    out.F1.resize(Nt);
    out.F2.resize(Nt);
    for (int j = 0; j < Nt; ++j) {
        out.F1[j] = (sol.inner_trace.samples[j] - rad.c) / rad.c;
        out.F2[j] = (sol.outer_trace.samples[j] - rad.c) / rad.c;
    }
    out.solution = std::move(sol);
    return out;
}

OverdeterminedResidual evaluate_F(double lambda, const FourierPerturbation& perturbation, int Nr,
                                  int Nt) {
    OverdeterminedResidual out =
        evaluate_F_curves(lambda, perturbation.inner_series(), perturbation.outer_series(), Nr, Nt);
    out.solution.grid.perturbation = perturbation;
    return out;
}

Eigen::Matrix2d linearization_fd(double lambda, int degree_m, double h, int Nr, int Nt) {
    if (degree_m < 0) throw std::invalid_argument("degree m must be >= 0");
    if (!(h > 0.0)) throw std::invalid_argument("step h must be positive");
    const CosineSeries ybar = normalized_harmonic(degree_m);
    const CosineSeries zero{{0.0}};
    const double inner_scale = 1.0 / std::sqrt(lambda);  // lambda^{(1-n)/2} for n = 2

    std::vector<double> ybar_samples(Nt);
    const std::vector<double> theta = uniform_angles(Nt);
    for (int j = 0; j < Nt; ++j) ybar_samples[j] = ybar.eval(theta[j]);

    Eigen::Matrix2d M;
    const double quad_w = 2.0 * kPi / Nt;
    for (int col = 0; col < 2; ++col) {
        const CosineSeries dir = scaled(ybar, col == 0 ? inner_scale : 1.0);
        const CosineSeries& v1_dir = (col == 0) ? dir : zero;
        const CosineSeries& v2_dir = (col == 0) ? zero : dir;
        const OverdeterminedResidual plus =
            evaluate_F_curves(lambda, scaled(v1_dir, h), scaled(v2_dir, h), Nr, Nt);
        const OverdeterminedResidual minus =
            evaluate_F_curves(lambda, scaled(v1_dir, -h), scaled(v2_dir, -h), Nr, Nt);
        double proj1 = 0.0, proj2 = 0.0;
        for (int j = 0; j < Nt; ++j) {
            const double dF1 = (plus.F1[j] - minus.F1[j]) / (2.0 * h);
            const double dF2 = (plus.F2[j] - minus.F2[j]) / (2.0 * h);
            proj1 += dF1 * ybar_samples[j];
            proj2 += dF2 * ybar_samples[j];
        }
        // <., e1> carries the weight lambda^{n-1} and the lambda^{(1-n)/2}
        // factor of e1; together sqrt(lambda) for n = 2
        M(0, col) = std::sqrt(lambda) * proj1 * quad_w;
        M(1, col) = proj2 * quad_w;
    }
    return M;
}

}  // namespace annuli
