#include "annuli/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace annuli {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

DomainGeometry perimeter_area(double lambda, const FourierPerturbation& perturbation, int nodes) {
    if (nodes < 16) throw std::invalid_argument("perimeter_area: need at least 16 nodes");
    ProblemParams{2, lambda}.validate();
    const CosineSeries v1 = perturbation.inner_series();
    const CosineSeries v2 = perturbation.outer_series();

    DomainGeometry g;
    double area2 = 0.0;
    for (int j = 0; j < nodes; ++j) {
        const double th = kTwoPi * j / nodes;
        const double rin = lambda + v1.eval(th);
        const double rout = 1.0 - v2.eval(th);
        if (!(rin > 0.0 && rout > rin)) {
            throw std::invalid_argument("perimeter_area: inadmissible perturbation");
        }
        g.inner_length += std::hypot(rin, v1.deriv(th));
        g.outer_length += std::hypot(rout, v2.deriv(th));
        area2 += rout * rout - rin * rin;
    }
    const double h = kTwoPi / nodes;
    g.inner_length *= h;
    g.outer_length *= h;
    g.perimeter = g.inner_length + g.outer_length;
    g.area = 0.5 * area2 * h;
    return g;
}

CheegerReport cheeger_report(double lambda, const FourierPerturbation& perturbation, double c,
                             int nodes) {
    if (!(c > 0.0)) throw std::invalid_argument("cheeger_report: Neumann constant must be positive");
    CheegerReport rep;
    rep.geometry = perimeter_area(lambda, perturbation, nodes);
    rep.ratio = rep.geometry.perimeter / rep.geometry.area;
    rep.inv_c = 1.0 / c;
    rep.gap_abs = std::abs(rep.ratio - rep.inv_c);
    rep.gap_rel = rep.gap_abs / rep.inv_c;
    rep.div_gap = std::abs(rep.geometry.area - c * rep.geometry.perimeter);
    return rep;
}

CheegerReport cheeger_report(const BranchPoint& point, int nodes) {
    return cheeger_report(point.lambda, point.v, point.neumann_constant, nodes);
}

GradientBoundReport gradient_bound_check(const DirichletSolution& sol, double c) {
    if (!(c > 0.0)) throw std::invalid_argument("gradient_bound_check: c must be positive");
    const Eigen::MatrixXd mag = gradient_magnitude(sol);
    GradientBoundReport rep;
    rep.c = c;
    for (int i = 0; i <= sol.grid.Nr; ++i) {
        for (int j = 0; j < sol.grid.Nt; ++j) {
            const bool boundary = (i == 0 || i == sol.grid.Nr);
            if (boundary) {
                rep.max_boundary = std::max(rep.max_boundary, mag(i, j));
            } else {
                rep.max_interior = std::max(rep.max_interior, mag(i, j));
            }
        }
    }
    rep.strictly_below = rep.max_interior < c;
    return rep;
}

}  // namespace annuli
