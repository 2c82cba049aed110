// Acceptance runner: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 14 (byte-identical CLI output) invokes the CLI binary
// passed via --cli.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "zsf/verify.hpp"

namespace {

using zsf::CheckResult;
using zsf::SuiteResult;

struct Criterion {
    int id;
    std::string title;
    bool pass = true;
    double seconds = 0.0;
    std::vector<const CheckResult*> checks;
    std::string note;
    double runtime_limit = 0.0; // 0 = none
};

std::map<std::string, SuiteResult> g_suites;

const SuiteResult& suite(const std::string& name) {
    auto it = g_suites.find(name);
    if (it == g_suites.end()) {
        zsf::VerifyOptions opt; // pinned default seed
        it = g_suites.emplace(name, zsf::run_verify_suite(name, opt)).first;
    }
    return it->second;
}

const CheckResult& check(const std::string& suite_name,
                         const std::string& check_name) {
    for (const auto& c : suite(suite_name).checks)
        if (c.name == check_name) return c;
    std::fprintf(stderr, "missing check %s/%s\n", suite_name.c_str(),
                 check_name.c_str());
    std::exit(99);
}

Criterion make(int id, const std::string& title,
               const std::vector<std::pair<std::string, std::string>>& refs,
               double runtime_limit = 0.0) {
    Criterion c;
    c.id = id;
    c.title = title;
    c.runtime_limit = runtime_limit;
    for (const auto& r : refs) {
        const CheckResult& cr = check(r.first, r.second);
        c.checks.push_back(&cr);
        c.pass = c.pass && cr.pass;
        c.seconds += cr.seconds;
    }
    if (runtime_limit > 0.0 && c.seconds > runtime_limit) {
        c.pass = false;
        c.note = "runtime limit exceeded";
    }
    return c;
}

bool run_cli(const std::string& cli, const std::string& args,
             const std::string& out_file) {
    const std::string cmd = cli + " " + args + " > " + out_file + " 2>/dev/null";
    return std::system(cmd.c_str()) == 0;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Criterion determinism_criterion(const std::string& cli) {
    Criterion c;
    c.id = 14;
    c.title = "determinism: byte-identical CLI output";
    if (cli.empty()) {
        c.pass = false;
        c.note = "no --cli path given";
        return c;
    }
    const auto t0 = std::chrono::steady_clock::now();
    const std::string base = "/tmp/zsf_determinism_";
    const std::vector<std::string> cases = {
        "eval --space 1,0 --lambda 1.0i --units rho --t 0:2:0.25 "
        "--methods all --seed 7 --out json",
        "density --space 3,0 --lambda 0.5 --units geodesic "
        "--upsilon -8:8:0.5 --out csv",
        "series --space 1,0 --lambda 1.0i --terms 8 --out json",
    };
    for (std::size_t i = 0; i < cases.size() && c.pass; ++i) {
        const std::string f1 = base + std::to_string(i) + "_a";
        const std::string f2 = base + std::to_string(i) + "_b";
        if (!run_cli(cli, cases[i], f1) || !run_cli(cli, cases[i], f2)) {
            c.pass = false;
            c.note = "CLI invocation failed: " + cases[i];
            break;
        }
        const std::string a = slurp(f1), b = slurp(f2);
        if (a.empty() || a != b) {
            c.pass = false;
            c.note = "outputs differ or empty: " + cases[i];
        }
    }
    c.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return c;
}

} // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

    std::vector<Criterion> cs;
    cs.push_back(make(1, "master-integral equivalence (100-point grid)",
                      {{"master-integral", "closed-vs-quadrature-100pt"}},
                      60.0));
    cs.push_back(make(2, "quadratic transformation identity (50 draws)",
                      {{"master-integral", "quadratic-transform-50pt"}}));
    cs.push_back(make(3, "route agreement bochner/oracle/series",
                      {{"routes", "route-agreement-p1q0"},
                       {"routes", "route-agreement-p3q0"}},
                      120.0));
    cs.push_back(make(4, "probability normalization of the density",
                      {{"bochner", "unit-mass-5-unitary"}}));
    cs.push_back(make(5, "positivity of the density + Dirac boundary",
                      {{"positivity", "density-nonnegative"},
                       {"positivity", "dirac-degenerate-boundary"}}));
    cs.push_back(make(6, "Paley-Wiener decay rate = pi within 1%",
                      {{"decay", "rate-equals-pi-p1"},
                       {"decay", "fit-quality-p1"},
                       {"decay", "rate-equals-pi-p2"},
                       {"decay", "fit-quality-p2"}}));
    cs.push_back(make(7, "tube boundary: finite value + log blow-up fit",
                      {{"singularity", "finite-near-boundary"},
                       {"singularity", "log-blowup-fit"},
                       {"singularity", "sixth-point-prediction"}}));
    cs.push_back(make(8, "Harish-Chandra leading coefficient",
                      {{"routes", "hc-leading-coefficient"}}));
    cs.push_back(make(9, "Abel-Fourier identity (3 widths)",
                      {{"abel", "fourier-identity-w0.6"},
                       {"abel", "fourier-identity-w1.0"},
                       {"abel", "fourier-identity-w1.5"}}));
    cs.push_back(make(10, "spectral round trip (3 widths)",
                      {{"spectral-ff", "roundtrip-w0.6"},
                       {"spectral-ff", "roundtrip-w1.0"},
                       {"spectral-ff", "roundtrip-w1.5"}},
                      180.0));
    cs.push_back(make(11, "theorem 4.1 coefficients (3 pairs x 8 points)",
                      {{"theorem41", "coefficient-pair1"},
                       {"theorem41", "coefficient-pair2"},
                       {"theorem41", "coefficient-pair3"},
                       {"theorem41", "parseval-s0"}}));
    cs.push_back(make(12, "theorem 5.1 strip coefficients + closed density",
                      {{"theorem51", "coefficient-kfixed-(0.3+0i)rho"},
                       {"theorem51", "density-kfixed-(0.3+0i)rho"},
                       {"theorem51", "coefficient-kfixed-(0.5+0i)rho"},
                       {"theorem51", "density-kfixed-(0.5+0i)rho"},
                       {"theorem51", "coefficient-kfixed-(0.3+0.4i)rho"},
                       {"theorem51", "density-kfixed-(0.3+0.4i)rho"},
                       {"theorem51", "coefficient-kfixed-(0.9+0i)rho"},
                       {"theorem51", "density-kfixed-(0.9+0i)rho"}}));
    cs.push_back(make(13, "positive-definiteness sampling (5 seeds)",
                      {{"positivity", "gram-min-eigenvalue"}}));
    cs.push_back(determinism_criterion(cli));

    int failures = 0;
    for (const auto& c : cs) {
        double worst_ratio = 0.0;
        const CheckResult* worst = nullptr;
        for (const auto* ch : c.checks) {
            const double ratio = ch->tol > 0 ? ch->defect / ch->tol
                                             : (ch->defect > 0 ? 2.0 : 0.0);
            if (!worst || ratio > worst_ratio) {
                worst = ch;
                worst_ratio = ratio;
            }
        }
        std::printf("criterion %2d: %-4s %-55s", c.id,
                    c.pass ? "PASS" : "FAIL", c.title.c_str());
        if (worst)
            std::printf(" worst defect %.3e (tol %.3e)", worst->defect,
                        worst->tol);
        std::printf(" [%.1fs]", c.seconds);
        if (!c.note.empty()) std::printf(" -- %s", c.note.c_str());
        std::printf("\n");
        if (!c.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", int(cs.size()) - failures,
                cs.size());
    return failures == 0 ? 0 : 1;
}
