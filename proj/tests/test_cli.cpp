#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

const std::string kCli = ANNULI_CLI_PATH;

int run(const std::string& args) {
    const std::string cmd = kCli + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string tmp_path(const std::string& name) { return "/tmp/annuli_cli_test_" + name; }

}  // namespace

TEST_CASE("eigens: deterministic byte-identical output") {
    const std::string out1 = tmp_path("eig1.csv");
    const std::string out2 = tmp_path("eig2.csv");
    REQUIRE(run("eigens --n 3 --k 0..3 --lambda 0.01:0.99:99 --out " + out1) == 0);
    REQUIRE(run("eigens --n 3 --k 0..3 --lambda 0.01:0.99:99 --out " + out2) == 0);
    const std::string a = slurp(out1);
    const std::string b = slurp(out2);
    CHECK(a == b);
    CHECK(a.substr(0, 16) == "n,k,j,lambda,mu\n");
    // header + 4 degrees x 2 branches x 99 lambdas
    const auto lines = std::count(a.begin(), a.end(), '\n');
    CHECK(lines == 1 + 4 * 2 * 99);
    std::remove(out1.c_str());
    std::remove(out2.c_str());
}

TEST_CASE("eigens: degree-1 second branch is identically zero") {
    const std::string out = tmp_path("eig_k1.csv");
    REQUIRE(run("eigens --n 2 --k 1 --lambda 0.1:0.9:9 --out " + out) == 0);
    std::ifstream in(out);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        std::string n, k, j, lambda, mu;
        std::getline(ss, n, ',');
        std::getline(ss, k, ',');
        std::getline(ss, j, ',');
        std::getline(ss, lambda, ',');
        std::getline(ss, mu, ',');
        if (j == "2") CHECK(std::abs(std::stod(mu)) < 1e-12);
    }
    std::remove(out.c_str());
}

TEST_CASE("bifurcations: increasing lambda column, small residuals") {
    const std::string out = tmp_path("bif.csv");
    REQUIRE(run("bifurcations --n 2 --kmax 10 --tol 1e-12 --out " + out) == 0);
    std::ifstream in(out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "n,k,i_k,lambda_star,residual");
    double prev = 0.0;
    int rows = 0;
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        std::string field;
        std::getline(ss, field, ',');  // n
        std::getline(ss, field, ',');  // k
        std::getline(ss, field, ',');  // i_k
        std::getline(ss, field, ',');
        const double lambda_star = std::stod(field);
        std::getline(ss, field, ',');
        const double residual = std::stod(field);
        CHECK(lambda_star > prev);
        CHECK(residual < 1e-12);
        prev = lambda_star;
        ++rows;
    }
    CHECK(rows == 10);
    std::remove(out.c_str());
}

TEST_CASE("usage errors exit with status 1") {
    CHECK(run("eigens --n 3 --k 1 --lambda 0.5:0.9:0") == 1);  // empty grid
    CHECK(run("bifurcations --n 2 --kmax 0") == 1);
    CHECK(run("branch --n 3 --mode 2 --s 0.01") == 1);  // PDE path is n = 2 only
    CHECK(run("branch --n 2 --mode 3 --s 0.01") == 1);  // odd degree
    CHECK(run("nonsense") == 1);
}

TEST_CASE("computation failures exit with status 2") {
    // bisection cannot reach 1e-18 in double precision
    CHECK(run("bifurcations --n 2 --kmax 1 --tol 1e-18") == 2);
}

TEST_CASE("io failures exit with status 3") {
    CHECK(run("eigens --n 2 --k 1 --lambda 0.5 --out /nonexistent_dir/x.csv") == 3);
}

TEST_CASE("solve writes traces and metadata") {
    const std::string inner = tmp_path("inner.csv");
    const std::string meta = tmp_path("meta.json");
    REQUIRE(run("solve --lambda 0.5 --coeffs1 0,0.01 --nr 16 --nt 32 --out-inner " + inner +
                " --json " + meta) == 0);
    const std::string trace = slurp(inner);
    CHECK(trace.substr(0, 12) == "theta,value\n");
    CHECK(std::count(trace.begin(), trace.end(), '\n') == 1 + 32);
    const std::string j = slurp(meta);
    CHECK(j.find("\"c_lambda\"") != std::string::npos);
    CHECK(j.find("\"inner_trace_cosine\"") != std::string::npos);
    std::remove(inner.c_str());
    std::remove(meta.c_str());
}

TEST_CASE("config file supplies defaults, flags override") {
    const std::string cfg = tmp_path("cfg.json");
    {
        std::ofstream out(cfg);
        out << R"({"n": 2, "kmax": 3, "tol": 1e-10})";
    }
    const std::string out1 = tmp_path("bif_cfg.csv");
    REQUIRE(run("--config " + cfg + " bifurcations --kmax 2 --out " + out1) == 0);
    const std::string body = slurp(out1);
    // kmax from the flag (2 rows), n and tol from the config
    CHECK(std::count(body.begin(), body.end(), '\n') == 1 + 2);
    std::remove(cfg.c_str());
    std::remove(out1.c_str());
}

TEST_CASE("validate --quick passes and exits zero") {
    CHECK(run("validate --quick") == 0);
}

TEST_CASE("branch writes JSON-lines records and domain curves") {
    const std::string out = tmp_path("branch.jsonl");
    const std::string curves = tmp_path("curves");
    REQUIRE(run("branch --n 2 --mode 2 --s 0.01 --nr 16 --nt 40 --jmodes 5 --tol 1e-7 --out " +
                out + " --curves " + curves) == 0);
    const std::string body = slurp(out);
    CHECK(std::count(body.begin(), body.end(), '\n') == 1);
    CHECK(body.find("\"converged\":true") != std::string::npos);
    CHECK(body.find("\"cheeger\"") != std::string::npos);
    CHECK(body.find("\"verify\"") != std::string::npos);
    const std::string curve_body = slurp(curves + "_0.csv");
    CHECK(curve_body.substr(0, 22) == "theta,r_inner,r_outer\n");
    std::remove(out.c_str());
    std::remove((curves + "_0.csv").c_str());
}

TEST_CASE("cheeger report on the trivial annulus") {
    const std::string out = tmp_path("cheeger.json");
    REQUIRE(run("cheeger --lambda 0.5 --nr 16 --nt 32 --out " + out) == 0);
    const std::string body = slurp(out);
    CHECK(body.find("\"ratio\"") != std::string::npos);
    CHECK(body.find("\"grad_bound_ok\": true") != std::string::npos);
    std::remove(out.c_str());
}
