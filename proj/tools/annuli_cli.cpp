// Command-line laboratory for the overdetermined annulus problem: eigenvalue
// tables of the linearized operator, bifurcation values, Newton continuation
// of nontrivial domains, Cheeger verification, and a self-check suite.
//
// Exit codes: 0 success, 1 usage error, 2 computation failure, 3 I/O failure.

#include <CLI11.hpp>
#include <cmath>
#include <numbers>
#include <fstream>
#include <iostream>
#include <memory>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "annuli/annulus_pde.hpp"
#include "annuli/bifurcation.hpp"
#include "annuli/continuation.hpp"
#include "annuli/errors.hpp"
#include "annuli/format.hpp"
#include "annuli/geometry.hpp"
#include "annuli/modes.hpp"

using json = nlohmann::json;
using namespace annuli;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;
constexpr int kExitIo = 3;

// ---------------------------------------------------------------------------
// small I/O helpers

class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) : path_(path) {
        if (path.empty() || path == "-") {
            stream_ = &std::cout;
            return;
        }
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_) throw IoError("cannot open output file: " + path);
        stream_ = file_.get();
    }
    std::ostream& stream() { return *stream_; }
    void finish() {
        stream_->flush();
        if (file_ && !*file_) throw IoError("write failed: " + path_);
    }

private:
    std::string path_;
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_ = nullptr;
};

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        values.push_back(std::stod(item));
    }
    if (values.empty()) throw CLI::ValidationError("empty numeric list: " + text);
    return values;
}

// "a..b" (integer range), "a,b,c" or a single value
std::vector<double> parse_degree_list(const std::string& text) {
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        if (hi < lo) throw CLI::ValidationError("empty degree range: " + text);
        std::vector<double> values;
        for (int k = lo; k <= hi; ++k) values.push_back(k);
        return values;
    }
    return parse_double_list(text);
}

// "start:end:count" or a comma list
std::vector<double> parse_grid(const std::string& text) {
    if (text.find(':') == std::string::npos) return parse_double_list(text);
    std::stringstream ss(text);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    if (parts.size() != 3) throw CLI::ValidationError("grid must be start:end:count, got " + text);
    const double start = std::stod(parts[0]);
    const double end = std::stod(parts[1]);
    const int count = std::stoi(parts[2]);
    if (count < 1) throw CLI::ValidationError("grid count must be >= 1");
    std::vector<double> grid(count);
    for (int i = 0; i < count; ++i) {
        grid[i] = count == 1 ? start : start + (end - start) * i / (count - 1);
    }
    return grid;
}

// optional JSON config file; values apply only where the flag was not given
json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw CLI::ValidationError(std::string("bad config JSON: ") + e.what());
    }
    return j;
}

template <typename T>
void cfg_override(const CLI::App& cmd, const json& cfg, const std::string& key, T& value) {
    const CLI::Option* opt = cmd.get_option_no_throw("--" + key);
    if (opt != nullptr && opt->count() > 0) return;  // flags win
    if (cfg.contains(key)) value = cfg.at(key).get<T>();
}

FourierPerturbation perturbation_from_lists(const std::string& coeffs1,
                                            const std::string& coeffs2) {
    std::vector<double> c1 = coeffs1.empty() ? std::vector<double>{0.0} : parse_double_list(coeffs1);
    std::vector<double> c2 = coeffs2.empty() ? std::vector<double>{0.0} : parse_double_list(coeffs2);
    const std::size_t len = std::max(c1.size(), c2.size());
    c1.resize(len, 0.0);
    c2.resize(len, 0.0);
    FourierPerturbation p;
    p.coeffs1 = std::move(c1);
    p.coeffs2 = std::move(c2);
    return p;
}

json cheeger_json(const CheegerReport& rep, const GradientBoundReport& grad) {
    return json{{"perimeter", rep.geometry.perimeter},
                {"area", rep.geometry.area},
                {"ratio", rep.ratio},
                {"inv_c", rep.inv_c},
                {"gap_abs", rep.gap_abs},
                {"gap_rel", rep.gap_rel},
                {"div_gap", rep.div_gap},
                {"grad_max_interior", grad.max_interior},
                {"grad_bound_ok", grad.strictly_below}};
}

// ---------------------------------------------------------------------------
// subcommands

struct EigensOptions {
    int n = 3;
    std::string k_list = "0..3";
    std::string lambda_grid = "0.01:0.99:99";
    std::string out;
};

void run_eigens(const EigensOptions& opt) {
    const auto ks = parse_degree_list(opt.k_list);
    const auto grid = parse_grid(opt.lambda_grid);
    const auto rows = eigen_branch_table(opt.n, ks, grid);
    OutputTarget target(opt.out);
    target.stream() << "n,k,j,lambda,mu\n";
    for (const auto& row : rows) {
        target.stream() << opt.n << ',' << g17(row.k) << ',' << row.j << ',' << g17(row.lambda)
                        << ',' << g17(row.mu) << '\n';
    }
    target.finish();
}

struct BifurcationsOptions {
    int n = 2;
    int kmax = 10;
    double tol = 1e-12;
    std::string out;
};

void run_bifurcations(const BifurcationsOptions& opt) {
    const auto rows = bifurcation_table(opt.n, opt.kmax, opt.tol);
    OutputTarget target(opt.out);
    target.stream() << "n,k,i_k,lambda_star,residual\n";
    for (const auto& row : rows) {
        target.stream() << opt.n << ',' << row.k << ',' << row.degree << ','
                        << g17(row.lambda_star) << ',' << g17(row.residual) << '\n';
    }
    target.finish();
}

struct BranchOptions {
    int n = 2;
    int mode = 2;
    std::string s_list = "0.005,0.01,0.02";
    int nr = 24;
    int nt = 48;
    int jmodes = 8;
    double tol = 1e-8;
    std::string out;
    std::string curves;  // optional prefix for boundary-curve CSVs
};

void write_domain_curves(const std::string& path, const BranchPoint& pt, int samples) {
    const CosineSeries v1 = pt.v.inner_series();
    const CosineSeries v2 = pt.v.outer_series();
    OutputTarget target(path);
    target.stream() << "theta,r_inner,r_outer\n";
    for (int j = 0; j < samples; ++j) {
        const double th = 2.0 * std::numbers::pi * j / samples;
        target.stream() << g17(th) << ',' << g17(pt.lambda + v1.eval(th)) << ','
                        << g17(1.0 - v2.eval(th)) << '\n';
    }
    target.finish();
}

int run_branch(const BranchOptions& opt) {
    if (opt.n != 2) throw CLI::ValidationError("the continuation solver supports n = 2 only");
    if (opt.mode < 2 || opt.mode % 2 != 0) {
        throw CLI::ValidationError("--mode must be an even harmonic degree >= 2");
    }
    const auto s_values = parse_double_list(opt.s_list);
    const BifurcationValue star = find_lambda_star(opt.n, opt.mode, 1e-12);
    const TangentVector tangent = tangent_vector(star.lambda_star, opt.mode);

    ContinuationConfig cfg;
    cfg.Nr = opt.nr;
    cfg.Nt = opt.nt;
    cfg.J = opt.jmodes;
    cfg.tol = opt.tol;

    const auto points = continue_branch(tangent, s_values, cfg);

    OutputTarget target(opt.out);
    int index = 0;
    bool all_converged = true;
    for (const auto& pt : points) {
        json record{{"s", pt.s},
                    {"lambda", pt.lambda},
                    {"lambda_star", tangent.lambda_star},
                    {"lambda_minus_lambda_star", pt.lambda - tangent.lambda_star},
                    {"mode", pt.mode},
                    {"converged", pt.converged},
                    {"newton_iters", pt.newton_iters},
                    {"residual_sup", pt.residual_sup},
                    {"ortho", pt.ortho},
                    {"neumann_constant", pt.neumann_constant},
                    {"inner_dirichlet", pt.inner_dirichlet},
                    {"w1", pt.w.coeffs1},
                    {"w2", pt.w.coeffs2},
                    {"v1", pt.v.coeffs1},
                    {"v2", pt.v.coeffs2},
                    {"message", pt.message}};
        if (pt.converged) {
            const OverdeterminedReport rep = verify_overdetermined(pt, cfg);
            const CheegerReport cheeger = cheeger_report(pt);
            GradientBoundReport grad;
            grad.max_interior = rep.grad_max_interior;
            grad.max_boundary = rep.grad_max_boundary;
            grad.c = rep.c;
            grad.strictly_below = rep.grad_bound_ok;
            record["verify"] = json{{"c", rep.c},
                                    {"inner_mean", rep.inner_mean},
                                    {"outer_mean", rep.outer_mean},
                                    {"inner_max_dev", rep.inner_max_dev},
                                    {"outer_max_dev", rep.outer_max_dev},
                                    {"max_joint_dev", rep.max_joint_dev},
                                    {"u_min_interior", rep.u_min_interior},
                                    {"u_positive", rep.u_positive},
                                    {"nontrivial", rep.nontrivial}};
            record["cheeger"] = cheeger_json(cheeger, grad);
        } else {
            all_converged = false;
        }
        target.stream() << record.dump() << '\n';
        if (!opt.curves.empty() && pt.converged) {
            write_domain_curves(opt.curves + "_" + std::to_string(index) + ".csv", pt, 256);
        }
        ++index;
    }
    target.finish();
    if (!all_converged || points.size() < s_values.size()) {
        std::cerr << "branch: continuation stopped before completing all amplitudes\n";
        return kExitComputation;
    }
    return kExitOk;
}

struct SolveOptions {
    double lambda = 0.5;
    std::string coeffs1, coeffs2;
    int nr = 32;
    int nt = 64;
    std::string out_inner, out_outer, out_json;
};

void write_trace_csv(const std::string& path, const std::vector<double>& theta,
                     const std::vector<double>& values) {
    OutputTarget target(path);
    target.stream() << "theta,value\n";
    for (std::size_t j = 0; j < theta.size(); ++j) {
        target.stream() << g17(theta[j]) << ',' << g17(values[j]) << '\n';
    }
    target.finish();
}

void run_solve(const SolveOptions& opt) {
    const FourierPerturbation pert = perturbation_from_lists(opt.coeffs1, opt.coeffs2);
    const RadialSolution rad = boundary_data({2, opt.lambda});
    const MappedAnnulusGrid grid = build_grid(opt.lambda, pert, opt.nr, opt.nt);
    const DirichletSolution sol = solve_dirichlet(grid, rad.a);

    if (!opt.out_inner.empty()) write_trace_csv(opt.out_inner, grid.theta, sol.inner_trace.samples);
    if (!opt.out_outer.empty()) write_trace_csv(opt.out_outer, grid.theta, sol.outer_trace.samples);

    const BoundaryMeans means = boundary_trace_means(sol);
    json meta{{"lambda", opt.lambda},
              {"n", 2},
              {"Nr", grid.Nr},
              {"Nt", grid.Nt},
              {"a", rad.a},
              {"c_lambda", rad.c},
              {"coeffs1", pert.coeffs1},
              {"coeffs2", pert.coeffs2},
              {"residual_rel", sol.residual_rel},
              {"inner_trace_cosine", sol.inner_trace.cosine},
              {"outer_trace_cosine", sol.outer_trace.cosine},
              {"inner_mean", means.inner_mean},
              {"outer_mean", means.outer_mean},
              {"pooled_mean", means.pooled}};
    if (!opt.out_json.empty()) {
        std::vector<double> u_flat;
        u_flat.reserve((grid.Nr + 1) * grid.Nt);
        for (int i = 0; i <= grid.Nr; ++i) {
            for (int j = 0; j < grid.Nt; ++j) u_flat.push_back(sol.u(i, j));
        }
        meta["u"] = u_flat;
        meta["s_nodes"] = grid.s;
        meta["theta_nodes"] = grid.theta;
    }
    OutputTarget target(opt.out_json);
    target.stream() << meta.dump(2) << '\n';
    target.finish();
}

struct CheegerOptions {
    double lambda = 0.5;
    std::string coeffs1, coeffs2;
    int nr = 24;
    int nt = 48;
    std::string out;
};

void run_cheeger(const CheegerOptions& opt) {
    const FourierPerturbation pert = perturbation_from_lists(opt.coeffs1, opt.coeffs2);
    const RadialSolution rad = boundary_data({2, opt.lambda});
    const MappedAnnulusGrid grid = build_grid(opt.lambda, pert, opt.nr, opt.nt);
    const DirichletSolution sol = solve_dirichlet(grid, rad.a);
    const BoundaryMeans means = boundary_trace_means(sol);
    const CheegerReport rep = cheeger_report(opt.lambda, pert, means.pooled);
    const GradientBoundReport grad = gradient_bound_check(sol, means.pooled);
    OutputTarget target(opt.out);
    target.stream() << cheeger_json(rep, grad).dump(2) << '\n';
    target.finish();
}

// ---------------------------------------------------------------------------
// validate: the cross-module invariant suite

struct ValidateOptions {
    bool quick = false;
    std::string out_json;
};

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

class Validator {
public:
    template <typename Fn>
    void check(const std::string& name, Fn&& fn) {
        CheckResult result{name, false, ""};
        try {
            result.detail = fn();
            result.pass = true;
        } catch (const std::exception& e) {
            result.detail = e.what();
        }
        results_.push_back(result);
        std::cout << (result.pass ? "PASS " : "FAIL ") << name;
        if (!result.detail.empty()) std::cout << "  (" << result.detail << ")";
        std::cout << '\n';
    }

    bool all_passed() const {
        for (const auto& r : results_) {
            if (!r.pass) return false;
        }
        return true;
    }

    json to_json() const {
        json checks = json::array();
        for (const auto& r : results_) {
            checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        }
        return {{"checks", checks}, {"all_passed", all_passed()}};
    }

private:
    std::vector<CheckResult> results_;
};

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& msg) {
    if (!cond) throw CheckFailure(msg);
}

int run_validate(const ValidateOptions& opt) {
    Validator v;
    const std::vector<int> dims{2, 3, 4, 5};
    std::vector<double> lgrid;
    for (int i = 1; i <= 19; ++i) lgrid.push_back(0.05 * i);

    v.check("eigen closed form vs direct solver", [&] {
        double worst = 0.0;
        for (int n : dims) {
            for (double lam : lgrid) {
                for (int k = 0; k <= 20; ++k) {
                    const EigenPair cf = eigen_closed_form({n, lam}, k);
                    const EigenPair dir = eigen_direct(mode_matrix({n, lam}, k));
                    worst = std::max({worst, std::abs(cf.mu1 - dir.mu1), std::abs(cf.mu2 - dir.mu2)});
                }
            }
        }
        expect(worst < 1e-10, "max |delta| = " + g17(worst) + ", expected < 1e-10");
        return "max |delta| = " + g17(worst);
    });

    v.check("matrix entries vs profile construction", [&] {
        double worst = 0.0;
        for (int n : dims) {
            for (double lam : lgrid) {
                for (int k = 0; k <= 20; ++k) {
                    const ModeMatrix a = mode_matrix({n, lam}, k);
                    const ModeMatrix b = mode_matrix_via_profiles({n, lam}, k);
                    worst = std::max({worst, std::abs(a.m11 - b.m11), std::abs(a.m12 - b.m12),
                                      std::abs(a.m22 - b.m22)});
                }
            }
        }
        expect(worst < 1e-12, "max |delta| = " + g17(worst) + ", expected < 1e-12");
        return "max |delta| = " + g17(worst);
    });

    v.check("degree-1 exactness", [&] {
        double worst = 0.0;
        for (int n : dims) {
            for (double lam : lgrid) {
                const EigenPair e = eigen_closed_form({n, lam}, 1.0);
                const double inv_c = 1.0 / boundary_data({n, lam}).c;
                worst = std::max({worst, std::abs(e.mu2), std::abs(e.mu1 + inv_c)});
            }
        }
        expect(worst < 1e-12, "max |delta| = " + g17(worst) + ", expected < 1e-12");
        return "max |delta| = " + g17(worst);
    });

    v.check("small-lambda limit mu_{k,1} -> k-1", [&] {
        double worst = 0.0;
        for (int n : dims) {
            for (int k = 2; k <= 10; ++k) {
                worst = std::max(worst,
                                 std::abs(eigen_closed_form({n, 1e-6}, k).mu1 - (k - 1.0)));
            }
        }
        expect(worst < 1e-3, "max |delta| = " + g17(worst) + ", expected < 1e-3");
        return "max |delta| = " + g17(worst);
    });

    v.check("monotonicity and sign structure", [&] {
        for (int n : dims) {
            for (int k = 2; k <= 20; ++k) {
                for (std::size_t i = 0; i + 1 < lgrid.size(); ++i) {
                    expect(eigen_closed_form({n, lgrid[i + 1]}, k).mu1 <
                               eigen_closed_form({n, lgrid[i]}, k).mu1,
                           "mu_{k,1} not decreasing in lambda");
                }
            }
            for (double lam : lgrid) {
                for (int k = 0; k <= 19; ++k) {
                    const EigenPair lo = eigen_closed_form({n, lam}, k);
                    const EigenPair hi = eigen_closed_form({n, lam}, k + 1);
                    expect(hi.mu1 > lo.mu1 && hi.mu2 > lo.mu2, "mu not increasing in k");
                    if (k >= 2) expect(lo.mu2 > 0.0, "mu_{k,2} not positive");
                }
                const EigenPair k0 = eigen_closed_form({n, lam}, 0.0);
                expect(k0.mu1 < k0.mu2 && k0.mu2 < 0.0, "k = 0 eigenvalues not negative");
            }
        }
        return std::string("all scans clean");
    });

    v.check("large-k asymptotics", [&] {
        double worst = 0.0;
        for (int n : dims) {
            for (double lam : {0.25, 0.5, 0.75}) {
                const EigenPair e = eigen_closed_form({n, lam}, 1e4);
                worst = std::max({worst, std::abs(e.mu1 / 1e4 - 1.0),
                                  std::abs(lam * e.mu2 / 1e4 - 1.0)});
            }
        }
        expect(worst < 0.01, "max |delta| = " + g17(worst) + ", expected < 0.01");
        return "max |delta| = " + g17(worst);
    });

    v.check("bifurcation values, degrees 2..20", [&] {
        double prev = 0.0, worst_res = 0.0;
        for (int m = 2; m <= 20; ++m) {
            const BifurcationValue val = find_lambda_star(2, m, 1e-12);
            expect(val.lambda_star > prev, "sequence not increasing");
            prev = val.lambda_star;
            worst_res = std::max(worst_res, val.residual);
            if (m == 2) {
                expect(val.lambda_star > 0.25 && val.lambda_star < 0.30,
                       "degree-2 root outside (0.25, 0.30)");
            }
        }
        return "max residual = " + g17(worst_res);
    });

    // reported, not asserted: behaviour of the second branch in lambda
    {
        bool decreasing = true;
        for (int k = 2; k <= 6 && decreasing; ++k) {
            for (std::size_t i = 0; i + 1 < lgrid.size(); ++i) {
                if (eigen_closed_form({3, lgrid[i + 1]}, k).mu2 >=
                    eigen_closed_form({3, lgrid[i]}, k).mu2) {
                    decreasing = false;
                    break;
                }
            }
        }
        std::cout << "INFO mu_{k,2} decreasing in lambda on the scan (n=3, k=2..6): "
                  << (decreasing ? "yes" : "no") << '\n';
    }

    if (!opt.quick) {
        v.check("trivial-annulus PDE exactness", [&] {
            const RadialSolution rad = boundary_data({2, 0.5});
            const auto grid = build_grid(0.5, FourierPerturbation::zero(), 32, 64);
            const DirichletSolution sol = solve_dirichlet(grid, rad.a);
            double worst = 0.0;
            for (int i = 0; i <= grid.Nr; ++i) {
                for (int j = 0; j < grid.Nt; ++j) {
                    worst = std::max(worst, std::abs(sol.u(i, j) -
                                                     u_radial({2, 0.5}, grid.r[grid.index(i, j)])));
                }
            }
            for (int j = 0; j < grid.Nt; ++j) {
                worst = std::max({worst, std::abs(sol.inner_trace.samples[j] - rad.c),
                                  std::abs(sol.outer_trace.samples[j] - rad.c)});
            }
            expect(worst < 1e-8, "max error = " + g17(worst) + ", expected < 1e-8");
            return "max error = " + g17(worst);
        });

        v.check("finite-difference linearization, modes 0..4", [&] {
            double worst = 0.0;
            for (int m = 0; m <= 4; ++m) {
                const Eigen::Matrix2d fd = linearization_fd(0.5, m, 1e-5, 24, 32);
                const ModeMatrix mm = mode_matrix({2, 0.5}, m);
                const double rel = std::max({std::abs(fd(0, 0) - mm.m11) / std::abs(mm.m11),
                                             std::abs(fd(0, 1) - mm.m12) / std::abs(mm.m12),
                                             std::abs(fd(1, 0) - mm.m12) / std::abs(mm.m12),
                                             std::abs(fd(1, 1) - mm.m22) / std::abs(mm.m22)});
                worst = std::max(worst, rel);
                expect(std::abs(fd(0, 1) - fd(1, 0)) <
                           1e-4 * std::max(1.0, std::abs(fd(0, 1))),
                       "FD matrix not symmetric at mode " + std::to_string(m));
            }
            expect(worst < 1e-4, "max rel error = " + g17(worst) + ", expected < 1e-4");
            return "max rel error = " + g17(worst);
        });
    }

    if (!opt.out_json.empty()) {
        OutputTarget target(opt.out_json);
        target.stream() << v.to_json().dump(2) << '\n';
        target.finish();
    }
    std::cout << (v.all_passed() ? "ALL CHECKS PASSED" : "CHECKS FAILED") << '\n';
    return v.all_passed() ? kExitOk : kExitComputation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for the overdetermined annulus problem"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (flags override file values)");

    EigensOptions eig;
    CLI::App* eigens = app.add_subcommand("eigens", "eigenvalue branches as CSV");
    eigens->add_option("--n", eig.n, "ambient dimension");
    eigens->add_option("--k", eig.k_list, "degree list: a..b or comma list");
    eigens->add_option("--lambda", eig.lambda_grid, "lambda grid: start:end:count or comma list");
    eigens->add_option("--out", eig.out, "output CSV path (default stdout)");

    BifurcationsOptions bif;
    CLI::App* bifurcations = app.add_subcommand("bifurcations", "bifurcation values as CSV");
    bifurcations->add_option("--n", bif.n, "ambient dimension");
    bifurcations->add_option("--kmax", bif.kmax, "number of invariant modes");
    bifurcations->add_option("--tol", bif.tol, "bisection tolerance");
    bifurcations->add_option("--out", bif.out, "output CSV path (default stdout)");

    BranchOptions br;
    CLI::App* branch = app.add_subcommand("branch", "Newton continuation of a nontrivial branch");
    branch->add_option("--n", br.n, "ambient dimension (must be 2)");
    branch->add_option("--mode", br.mode, "even harmonic degree m >= 2");
    branch->add_option("--s", br.s_list, "amplitudes, comma list sorted by |s|");
    branch->add_option("--nr", br.nr, "radial nodes");
    branch->add_option("--nt", br.nt, "angular nodes");
    branch->add_option("--jmodes", br.jmodes, "retained even cosine modes per boundary");
    branch->add_option("--tol", br.tol, "Newton residual tolerance");
    branch->add_option("--out", br.out, "JSON-lines output path (default stdout)");
    branch->add_option("--curves", br.curves, "prefix for per-point boundary CSVs");

    SolveOptions sv;
    CLI::App* solve = app.add_subcommand("solve", "Dirichlet solve on a perturbed annulus");
    solve->add_option("--lambda", sv.lambda, "inner radius");
    solve->add_option("--coeffs1", sv.coeffs1, "even cosine coefficients of v1 (comma list)");
    solve->add_option("--coeffs2", sv.coeffs2, "even cosine coefficients of v2 (comma list)");
    solve->add_option("--nr", sv.nr, "radial nodes");
    solve->add_option("--nt", sv.nt, "angular nodes");
    solve->add_option("--out-inner", sv.out_inner, "inner trace CSV path");
    solve->add_option("--out-outer", sv.out_outer, "outer trace CSV path");
    solve->add_option("--json", sv.out_json, "solution metadata JSON path (default stdout)");

    CheegerOptions ch;
    CLI::App* cheeger = app.add_subcommand("cheeger", "Cheeger-ratio report for a domain");
    cheeger->add_option("--lambda", ch.lambda, "inner radius");
    cheeger->add_option("--coeffs1", ch.coeffs1, "even cosine coefficients of v1");
    cheeger->add_option("--coeffs2", ch.coeffs2, "even cosine coefficients of v2");
    cheeger->add_option("--nr", ch.nr, "radial nodes");
    cheeger->add_option("--nt", ch.nt, "angular nodes");
    cheeger->add_option("--out", ch.out, "report JSON path (default stdout)");

    ValidateOptions va;
    CLI::App* validate = app.add_subcommand("validate", "run the cross-module invariant suite");
    validate->add_flag("--quick", va.quick, "skip the PDE-based checks");
    validate->add_option("--json", va.out_json, "machine-readable summary path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const json cfg = load_config(config_path);
        if (eigens->parsed()) {
            cfg_override(*eigens, cfg, "n", eig.n);
            cfg_override(*eigens, cfg, "k", eig.k_list);
            cfg_override(*eigens, cfg, "lambda", eig.lambda_grid);
            cfg_override(*eigens, cfg, "out", eig.out);
            run_eigens(eig);
        } else if (bifurcations->parsed()) {
            cfg_override(*bifurcations, cfg, "n", bif.n);
            cfg_override(*bifurcations, cfg, "kmax", bif.kmax);
            cfg_override(*bifurcations, cfg, "tol", bif.tol);
            cfg_override(*bifurcations, cfg, "out", bif.out);
            run_bifurcations(bif);
        } else if (branch->parsed()) {
            cfg_override(*branch, cfg, "n", br.n);
            cfg_override(*branch, cfg, "mode", br.mode);
            cfg_override(*branch, cfg, "s", br.s_list);
            cfg_override(*branch, cfg, "nr", br.nr);
            cfg_override(*branch, cfg, "nt", br.nt);
            cfg_override(*branch, cfg, "jmodes", br.jmodes);
            cfg_override(*branch, cfg, "tol", br.tol);
            cfg_override(*branch, cfg, "out", br.out);
            return run_branch(br);
        } else if (solve->parsed()) {
            cfg_override(*solve, cfg, "lambda", sv.lambda);
            cfg_override(*solve, cfg, "coeffs1", sv.coeffs1);
            cfg_override(*solve, cfg, "coeffs2", sv.coeffs2);
            cfg_override(*solve, cfg, "nr", sv.nr);
            cfg_override(*solve, cfg, "nt", sv.nt);
            run_solve(sv);
        } else if (cheeger->parsed()) {
            cfg_override(*cheeger, cfg, "lambda", ch.lambda);
            cfg_override(*cheeger, cfg, "coeffs1", ch.coeffs1);
            cfg_override(*cheeger, cfg, "coeffs2", ch.coeffs2);
            run_cheeger(ch);
        } else if (validate->parsed()) {
            return run_validate(va);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ComputationError& e) {
        std::cerr << "computation error: " << e.what() << '\n';
        return kExitComputation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitComputation;
    }
    return kExitOk;
}
