#include "annuli/continuation.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "annuli/errors.hpp"
#include "annuli/geometry.hpp"
#include "annuli/modes.hpp"

namespace annuli {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// Unknown vector layout: even-mode coefficients of (w1, w2) with the
// coefficient at the tangent mode of one component eliminated through
// <w, z>_{lambda*} = 0, followed by lambda.
struct UnknownLayout {
    int J = 8;
    int jm = 1;                    // tangent mode index (mode m = 2 jm)
    bool eliminate_second = true;  // dependent slot lives in w2
    double dep_ratio = 0.0;        // dependent = dep_ratio * partner

    int count() const { return 2 * (J + 1); }

    FourierPerturbation unpack(const Eigen::VectorXd& x, double& lambda) const {
        FourierPerturbation w = FourierPerturbation::zero(J);
        int pos = 0;
        for (int j = 0; j <= J; ++j) {
            if (!eliminate_second && j == jm) continue;
            w.coeffs1[j] = x(pos++);
        }
        for (int j = 0; j <= J; ++j) {
            if (eliminate_second && j == jm) continue;
            w.coeffs2[j] = x(pos++);
        }
        if (eliminate_second) {
            w.coeffs2[jm] = dep_ratio * w.coeffs1[jm];
        } else {
            w.coeffs1[jm] = dep_ratio * w.coeffs2[jm];
        }
        lambda = x(pos);
        return w;
    }

    Eigen::VectorXd pack(const FourierPerturbation& w, double lambda) const {
        Eigen::VectorXd x = Eigen::VectorXd::Zero(count());
        int pos = 0;
        for (int j = 0; j <= J; ++j) {
            if (!eliminate_second && j == jm) continue;
            x(pos++) = j < static_cast<int>(w.coeffs1.size()) ? w.coeffs1[j] : 0.0;
        }
        for (int j = 0; j <= J; ++j) {
            if (eliminate_second && j == jm) continue;
            x(pos++) = j < static_cast<int>(w.coeffs2.size()) ? w.coeffs2[j] : 0.0;
        }
        x(pos) = lambda;
        return x;
    }
};

FourierPerturbation compose_v(const TangentVector& z, const FourierPerturbation& w, double s,
                              int J) {
    const FourierPerturbation zs = z.shape();
    FourierPerturbation v = FourierPerturbation::zero(J);
    for (int j = 0; j <= J; ++j) {
        const double z1 = j < static_cast<int>(zs.coeffs1.size()) ? zs.coeffs1[j] : 0.0;
        const double z2 = j < static_cast<int>(zs.coeffs2.size()) ? zs.coeffs2[j] : 0.0;
        const double w1 = j < static_cast<int>(w.coeffs1.size()) ? w.coeffs1[j] : 0.0;
        const double w2 = j < static_cast<int>(w.coeffs2.size()) ? w.coeffs2[j] : 0.0;
        v.coeffs1[j] = s * (z1 + w1);
        v.coeffs2[j] = s * (z2 + w2);
    }
    return v;
}

struct ResidualEval {
    Eigen::VectorXd G;   // retained even cosine coefficients of (F1, F2)
    double sup = 0.0;    // sup |F| over all samples
    OverdeterminedResidual full;
};

ResidualEval evaluate_residual(const UnknownLayout& layout, const TangentVector& z, double s,
                               const Eigen::VectorXd& x, const ContinuationConfig& cfg) {
    double lambda = 0.0;
    const FourierPerturbation w = layout.unpack(x, lambda);
    if (!(lambda >= kLambdaMin && lambda <= kLambdaMax)) {
        throw ComputationError("continuation stepped outside the admissible lambda range");
    }
    const FourierPerturbation v = compose_v(z, w, s, layout.J);

    ResidualEval out;
    out.full = evaluate_F(lambda, v, cfg.Nr, cfg.Nt);
    out.sup = out.full.sup_norm();
    const std::vector<double> c1 = cosine_coefficients(out.full.F1, 2 * layout.J);
    const std::vector<double> c2 = cosine_coefficients(out.full.F2, 2 * layout.J);
    out.G = Eigen::VectorXd::Zero(layout.count());
    for (int j = 0; j <= layout.J; ++j) {
        out.G(j) = c1[2 * j];
        out.G(layout.J + 1 + j) = c2[2 * j];
    }
    return out;
}

}  // namespace

FourierPerturbation TangentVector::shape() const {
    const int jm = mode / 2;
    FourierPerturbation z = FourierPerturbation::zero(jm);
    z.coeffs1[jm] = a1 / (std::sqrt(lambda_star) * kSqrtPi);
    z.coeffs2[jm] = a2 / kSqrtPi;
    return z;
}

TangentVector tangent_vector(double lambda_star, int degree_m) {
    if (degree_m < 2 || degree_m % 2 != 0) {
        throw std::invalid_argument("tangent requires an even harmonic degree >= 2");
    }
    const ProblemParams params{2, lambda_star};
    const EigenPair e = eigen_closed_form(params, static_cast<double>(degree_m));
    if (std::abs(e.mu1) > 1e-8) {
        throw std::invalid_argument("tangent_vector: mu_{m,1} is not zero at the given lambda");
    }
    TangentVector z;
    z.mode = degree_m;
    z.lambda_star = lambda_star;
    z.a1 = e.v1[0];
    z.a2 = e.v1[1];
    return z;
}

BranchPoint newton_solve_branch_point(const TangentVector& tangent, double s,
                                      const BranchPoint* init, const ContinuationConfig& cfg) {
    const int jm = tangent.mode / 2;
    if (cfg.J < jm + 4) {
        throw std::invalid_argument("continuation needs J >= m/2 + 4 retained modes");
    }
    if (2 * cfg.J > cfg.Nt / 2) {
        throw std::invalid_argument("angular grid too coarse for the retained modes (need Nt >= 4J)");
    }
    const double s_max = cfg.max_amplitude_factor * (1.0 - tangent.lambda_star);
    if (std::abs(s) > s_max) {
        throw std::invalid_argument("amplitude |s| exceeds the continuation trust region");
    }

    UnknownLayout layout;
    layout.J = cfg.J;
    layout.jm = jm;
    // <w, z>_{l*} = sqrt(pi) (sqrt(l*) a1 w1_m + a2 w2_m) for a mode m >= 2 pair
    const double p = std::sqrt(tangent.lambda_star) * tangent.a1;
    const double q = tangent.a2;
    layout.eliminate_second = std::abs(q) >= std::abs(p);
    layout.dep_ratio = layout.eliminate_second ? -p / q : -q / p;

    BranchPoint pt;
    pt.s = s;
    pt.mode = tangent.mode;

    Eigen::VectorXd x = init != nullptr
                            ? layout.pack(init->w, init->lambda)
                            : layout.pack(FourierPerturbation::zero(cfg.J), tangent.lambda_star);

    ResidualEval eval;
    try {
        eval = evaluate_residual(layout, tangent, s, x, cfg);
    } catch (const std::exception& e) {
        pt.message = std::string("initial evaluation failed: ") + e.what();
        return pt;
    }

    int iter = 0;
    for (; iter < cfg.max_newton && eval.sup >= cfg.tol; ++iter) {
        // forward-difference Jacobian, one column per unknown
        Eigen::MatrixXd Jmat(layout.count(), layout.count());
        bool jac_ok = true;
        for (int col = 0; col < layout.count(); ++col) {
            Eigen::VectorXd xp = x;
            xp(col) += cfg.fd_step;
            try {
                const ResidualEval ep = evaluate_residual(layout, tangent, s, xp, cfg);
                Jmat.col(col) = (ep.G - eval.G) / cfg.fd_step;
            } catch (const std::exception&) {
                jac_ok = false;
                break;
            }
        }
        if (!jac_ok) {
            pt.message = "Jacobian evaluation left the admissible region";
            break;
        }
        const Eigen::VectorXd step = Jmat.partialPivLu().solve(-eval.G);
        if (!step.allFinite()) {
            pt.message = "singular Newton system";
            break;
        }

        double t = 1.0;
        bool accepted = false;
        for (int halving = 0; halving < 8 && !accepted; ++halving, t *= 0.5) {
            try {
                const ResidualEval trial = evaluate_residual(layout, tangent, s, x + t * step, cfg);
                if (trial.sup < eval.sup || trial.sup < cfg.tol) {
                    x += t * step;
                    eval = trial;
                    accepted = true;
                }
            } catch (const std::exception&) {
                // inadmissible trial domain: shorten the step
            }
        }
        if (!accepted) {
            pt.message = "damped Newton stalled at residual " + std::to_string(eval.sup);
            break;
        }
    }

    double lambda = 0.0;
    pt.w = layout.unpack(x, lambda);
    pt.lambda = lambda;
    pt.v = compose_v(tangent, pt.w, s, cfg.J);
    pt.residual_sup = eval.sup;
    pt.newton_iters = iter;
    pt.ortho = inner_product_weighted(pt.w, tangent.shape(), tangent.lambda_star, 2);
    pt.neumann_constant = boundary_trace_means(eval.full.solution).pooled;
    pt.inner_dirichlet = boundary_data({2, lambda}).a;
    pt.converged = eval.sup < cfg.tol;
    if (pt.converged) {
        pt.message = "converged";
    } else if (pt.message.empty()) {
        pt.message = "iteration budget exhausted at residual " + std::to_string(eval.sup);
    }
    return pt;
}

std::vector<BranchPoint> continue_branch(const TangentVector& tangent,
                                         const std::vector<double>& s_list,
                                         const ContinuationConfig& cfg) {
    std::vector<BranchPoint> out;
    out.reserve(s_list.size());
    BranchPoint last_pos, last_neg;
    bool have_pos = false, have_neg = false;
    for (double s : s_list) {
        const BranchPoint* init = nullptr;
        if (s > 0.0 && have_pos) init = &last_pos;
        if (s < 0.0 && have_neg) init = &last_neg;
        BranchPoint pt = newton_solve_branch_point(tangent, s, init, cfg);
        const bool ok = pt.converged;
        out.push_back(std::move(pt));
        if (!ok) break;
        if (s > 0.0) {
            last_pos = out.back();
            have_pos = true;
        } else if (s < 0.0) {
            last_neg = out.back();
            have_neg = true;
        }
    }
    return out;
}

OverdeterminedReport verify_overdetermined(const BranchPoint& point,
                                           const ContinuationConfig& cfg) {
    const OverdeterminedResidual F = evaluate_F(point.lambda, point.v, cfg.Nr, cfg.Nt);
    const DirichletSolution& sol = F.solution;
    const BoundaryMeans means = boundary_trace_means(sol);

    OverdeterminedReport rep;
    rep.c = means.pooled;
    rep.inner_mean = means.inner_mean;
    rep.outer_mean = means.outer_mean;
    for (int j = 0; j < sol.grid.Nt; ++j) {
        rep.inner_max_dev =
            std::max(rep.inner_max_dev, std::abs(sol.inner_trace.samples[j] - rep.c));
        rep.outer_max_dev =
            std::max(rep.outer_max_dev, std::abs(sol.outer_trace.samples[j] - rep.c));
    }
    rep.max_joint_dev = std::max(rep.inner_max_dev, rep.outer_max_dev);
    rep.inner_dirichlet = sol.inner_value;

    double umin = std::numeric_limits<double>::infinity();
    for (int i = 1; i < sol.grid.Nr; ++i) {
        for (int j = 0; j < sol.grid.Nt; ++j) {
            umin = std::min(umin, sol.u(i, j));
        }
    }
    rep.u_min_interior = umin;
    rep.u_positive = umin > 0.0;

    const int jm = point.mode / 2;
    rep.v_mode_coeff_inner = jm < static_cast<int>(point.v.coeffs1.size()) ? point.v.coeffs1[jm] : 0.0;
    rep.v_mode_coeff_outer = jm < static_cast<int>(point.v.coeffs2.size()) ? point.v.coeffs2[jm] : 0.0;
    rep.nontrivial =
        point.s != 0.0 && std::abs(rep.v_mode_coeff_inner) + std::abs(rep.v_mode_coeff_outer) > 0.0;

    const GradientBoundReport grad = gradient_bound_check(sol, rep.c);
    rep.grad_max_interior = grad.max_interior;
    rep.grad_max_boundary = grad.max_boundary;
    rep.grad_bound_ok = grad.strictly_below;
    return rep;
}

}  // namespace annuli
