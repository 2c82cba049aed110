#include "zsf/verify.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>

#include "zsf/bochner.hpp"
#include "zsf/errors.hpp"
#include "zsf/parallel.hpp"
#include "zsf/quadrature.hpp"
#include "zsf/rankone.hpp"
#include "zsf/repsim.hpp"
#include "zsf/rng.hpp"
#include "zsf/specfun.hpp"
#include "zsf/spherical.hpp"
#include "zsf/transforms.hpp"

namespace zsf {

namespace {

using Clock = std::chrono::steady_clock;

class SuiteBuilder {
public:
    SuiteBuilder(std::string name, const VerifyOptions& opt)
        : opt_(opt) {
        result_.name = std::move(name);
    }

    // runs one check: fn returns the measured defect, pass iff defect <= tol
    void check(const std::string& name, double tol,
               const std::function<double()>& fn,
               const std::string& note = "") {
        CheckResult c;
        c.name = name;
        c.tol = tol * opt_.tol_scale;
        c.note = note;
        const auto t0 = Clock::now();
        try {
            c.defect = fn();
            c.pass = c.defect <= c.tol;
        } catch (const std::exception& e) {
            c.defect = std::numeric_limits<double>::infinity();
            c.pass = false;
            c.note = e.what();
        }
        c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        result_.checks.push_back(std::move(c));
    }

    SuiteResult take() { return std::move(result_); }
    const VerifyOptions& opt() const { return opt_; }

private:
    VerifyOptions opt_;
    SuiteResult result_;
};

const RankOneSpace kSl2 = RankOneSpace::sl2r();
const RankOneSpace kSo41 = RankOneSpace(3, 0);

// ---- small dense symmetric eigensolver (cyclic Jacobi) -------------------

double min_eigenvalue_symmetric(std::vector<double> a, int n) {
    auto at = [&](int i, int j) -> double& { return a[i * n + j]; };
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
        if (off < 1e-26) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double tau = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (tau >= 0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    double mn = at(0, 0);
    for (int i = 1; i < n; ++i) mn = std::min(mn, at(i, i));
    return mn;
}

// ---- suites ---------------------------------------------------------------

SuiteResult suite_master_integral(const VerifyOptions& opt) {
    SuiteBuilder sb("master-integral", opt);

    sb.check("closed-vs-quadrature-100pt", 1e-8, [&] {
        Rng rng(opt.seed);
        const double thetas[5] = {0.0, kPi / 6.0, kPi / 4.0, kPi / 3.0,
                                  kPi / 2.0};
        double worst = 0.0;
        std::vector<std::array<Complex, 2>> params;
        std::vector<double> ths;
        for (int i = 0; i < 100; ++i) {
            const Complex a(rng.uniform(-0.5, 2.0), rng.uniform(-5.0, 5.0));
            const double lo = 0.5 * (a.real() + 1.0) + 0.05;
            const Complex b(std::max(0.8, lo) + rng.uniform(0.0, 2.2),
                            rng.uniform(-5.0, 5.0));
            params.push_back({a, b});
            ths.push_back(thetas[i % 5]);
        }
        std::vector<double> defects(params.size());
        parallel_for_index(params.size(), [&](std::size_t i) {
            const Complex closed =
                master_integral_closed(params[i][0], params[i][1], ths[i]);
            const Complex quad = master_integral_quad(
                params[i][0], params[i][1], ths[i],
                std::max(1e-13, 1e-9 * std::abs(closed)));
            defects[i] = std::abs(closed - quad) / std::abs(closed);
        });
        for (double d : defects) worst = std::max(worst, d);
        return worst;
    });

    sb.check("quadratic-transform-50pt", 1e-9, [&] {
        Rng rng(opt.seed + 1);
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const Complex alpha(rng.uniform(-1.5, 2.0),
                                rng.uniform(-2.5, 2.5));
            const Complex beta(rng.uniform(0.3, 2.5), rng.uniform(-2.0, 2.0));
            const double z = rng.uniform(0.05, 0.8);
            worst = std::max(worst, quadratic_transform_check(alpha, beta, z));
        }
        return worst;
    });

    return sb.take();
}

SuiteResult suite_bochner(const VerifyOptions& opt) {
    SuiteBuilder sb("bochner", opt);

    sb.check("unit-mass-5-unitary", 1e-8, [&] {
        const double lams[5] = {0.3, 0.7, 1.3, 2.1, 3.4};
        double worst = 0.0;
        for (double lam : lams) {
            auto den = bochner_density(
                kSl2, SpectralParam::geodesic(Complex(lam)));
            const double U = den.truncation(1e-13);
            auto mass = integrate_adaptive_real(
                [&](double u) { return den(u); }, -U, U, 1e-11, 8000);
            worst = std::max(worst, std::abs(mass.value.real() - 1.0));
        }
        return worst;
    });

    sb.check("unit-mass-p3", 1e-8, [&] {
        auto den =
            bochner_density(kSo41, SpectralParam::geodesic(Complex(0.8)));
        const double U = den.truncation(1e-13);
        auto mass = integrate_adaptive_real([&](double u) { return den(u); },
                                            -U, U, 1e-11, 8000);
        return std::abs(mass.value.real() - 1.0);
    });

    sb.check("weyl-symmetry", 1e-12, [&] {
        double worst = 0.0;
        for (double lam : {0.6, 1.7}) {
            auto dp = bochner_density(kSl2,
                                      SpectralParam::geodesic(Complex(lam)));
            auto dm = bochner_density(kSl2,
                                      SpectralParam::geodesic(Complex(-lam)));
            for (double u = -20.0; u <= 20.0; u += 0.5)
                worst = std::max(worst, std::abs(dp(u) - dm(u)));
        }
        return worst;
    });

    sb.check("upsilon-evenness", 1e-12, [&] {
        auto den = bochner_density(kSl2, SpectralParam::rho(Complex(0.4)));
        double worst = 0.0;
        for (double u = 0.25; u <= 24.0; u += 0.25)
            worst = std::max(worst, std::abs(den(u) - den(-u)));
        return worst;
    });

    sb.check("factorization-reconstruction", 1e-12, [&] {
        auto den = bochner_density(kSl2, SpectralParam::rho(Complex(0.3)));
        double worst = 0.0;
        for (double u = -18.0; u <= 18.0; u += 1.5) {
            auto f = bochner_factorization(den, u);
            const Complex rebuilt = f.upsilon_plus * f.upsilon_minus * f.h;
            worst = std::max(worst, std::abs(rebuilt - den.value(u)) /
                                        std::abs(den.value(u)));
        }
        return worst;
    });

    sb.check("factorization-h-constant-q0", 1e-10, [&] {
        auto den =
            bochner_density(kSl2, SpectralParam::geodesic(Complex(0.9)));
        double h_min = 1e300, h_max = -1e300;
        for (double u = -20.0; u <= 20.0; u += 0.5) {
            const double h = bochner_factorization(den, u).h.real();
            h_min = std::min(h_min, h);
            h_max = std::max(h_max, h);
        }
        return (h_max - h_min) / std::abs(h_max);
    });

    sb.check("fourier-check-vs-oracle", 1e-7, [&] {
        auto den = bochner_density(kSl2, SpectralParam::geodesic(Complex(1.0)));
        double worst = 0.0;
        for (double t : {0.5, 1.0, 2.0}) {
            const Complex via = phi_via_bochner(den, Complex(t), 1e-9).value;
            const Complex ora = spherical_oracle(
                kSl2, SpectralParam::geodesic(Complex(1.0)), t).value;
            worst = std::max(worst, std::abs(via - ora));
        }
        return worst;
    });

    return sb.take();
}

SuiteResult suite_routes(const VerifyOptions& opt) {
    SuiteBuilder sb("routes", opt);

    for (const RankOneSpace& sp : {kSl2, kSo41}) {
        const std::string tag =
            "p" + std::to_string(sp.p) + "q" + std::to_string(sp.q);
        sb.check("route-agreement-" + tag, 1e-6, [&] {
            const double lams[3] = {0.5, 1.0, 2.0};
            const double ts[4] = {0.5, 1.0, 2.0, 4.0};
            std::vector<std::pair<double, double>> pts;
            for (double lam : lams)
                for (double t : ts) pts.push_back({lam, t});
            std::vector<double> defects(pts.size());
            parallel_for_index(pts.size(), [&](std::size_t i) {
                const auto lambda =
                    SpectralParam::geodesic(Complex(pts[i].first));
                const double t = pts[i].second;
                auto den = bochner_density(sp, lambda);
                const Complex b = phi_via_bochner(den, Complex(t), 1e-9).value;
                const Complex o = spherical_oracle(sp, lambda, t).value;
                const Complex s = phi_hc_series(sp, lambda, t, 64, 1e-9).value;
                defects[i] = std::max({std::abs(b - o), std::abs(s - o),
                                       std::abs(b - s)});
            });
            double worst = 0.0;
            for (double d : defects) worst = std::max(worst, d);
            return worst;
        });
    }

    sb.check("iwasawa-route-sl2", 1e-9, [&] {
        double worst = 0.0;
        for (double lam : {0.5, 2.0})
            for (double t : {0.7, 2.0}) {
                const auto lambda = SpectralParam::geodesic(Complex(lam));
                const Complex a = spherical_oracle(kSl2, lambda, t).value;
                const Complex b =
                    spherical_oracle_iwasawa(kSl2, lambda, t).value;
                worst = std::max(worst, std::abs(a - b));
            }
        return worst;
    });

    sb.check("hc-leading-coefficient", 1e-4, [&] {
        double worst = 0.0;
        for (double lam : {0.5, 1.0, 2.0}) {
            const auto lambda = SpectralParam::geodesic(Complex(lam));
            auto den = bochner_density(kSl2, lambda);
            const double rho = 2.0 * kSl2.r();
            const Complex il(0.0, lam);
            const double t1 = 6.0, t2 = 8.0;
            const Complex phi1 = phi_via_bochner(den, Complex(t1), 1e-11).value;
            const Complex phi2 = phi_via_bochner(den, Complex(t2), 1e-11).value;
            // solve [e^{(il-rho)t}, e^{(-il-rho)t}] [c+, c-] = phi(t)
            const Complex a11 = std::exp((il - rho) * t1);
            const Complex a12 = std::exp((-il - rho) * t1);
            const Complex a21 = std::exp((il - rho) * t2);
            const Complex a22 = std::exp((-il - rho) * t2);
            const Complex det = a11 * a22 - a12 * a21;
            const Complex c_plus = (phi1 * a22 - a12 * phi2) / det;
            const Complex want = hc_leading_coefficient(kSl2, lambda);
            worst = std::max(worst,
                             std::abs(c_plus - want) / std::abs(want));
        }
        return worst;
    });

    return sb.take();
}

SuiteResult suite_positivity(const VerifyOptions& opt) {
    SuiteBuilder sb("positivity", opt);

    std::vector<double> grid;
    for (double u = -40.0; u <= 40.0 + 1e-9; u += 0.25) grid.push_back(u);

    sb.check("density-nonnegative", 1e-10, [&] {
        double worst = -0.0;
        const Complex cases[6] = {{0.0, 0.0}, {0.0, 0.5}, {0.0, 1.0},
                                  {0.25, 0.0}, {0.5, 0.0}, {0.9, 0.0}};
        for (const Complex& ell : cases) {
            auto res =
                positivity_check(kSl2, SpectralParam::rho(ell), grid);
            if (res.status != PositivityStatus::GridNonNegative)
                return 1.0; // hard failure marker
            worst = std::max(worst, -res.min_value);
        }
        return std::max(0.0, worst);
    });

    sb.check("dirac-degenerate-boundary", 0.0, [&] {
        auto res = positivity_check(kSl2, SpectralParam::rho(Complex(1.0)),
                                    grid);
        return res.status == PositivityStatus::DiracDegenerate ? 0.0 : 1.0;
    });

    sb.check("gram-min-eigenvalue", 1e-8, [&] {
        const int n = 12;
        double worst = 0.0;
        for (int s = 0; s < 5; ++s) {
            Rng rng(opt.seed + 100 + s);
            const double lam = (s % 3 == 0) ? 0.5 : (s % 3 == 1 ? 1.0 : 2.0);
            std::vector<double> ts;
            while (static_cast<int>(ts.size()) < n) {
                const double cand = rng.uniform(-5.0, 5.0);
                bool ok = true;
                for (double prev : ts)
                    if (std::abs(prev - cand) < 0.3) ok = false;
                if (ok) ts.push_back(cand);
            }
            auto lambda = SpectralParam::geodesic(Complex(lam));
            std::vector<double> gram(n * n);
            std::vector<std::pair<int, int>> idx;
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) idx.push_back({i, j});
            std::vector<double> vals(idx.size());
            parallel_for_index(idx.size(), [&](std::size_t k) {
                const double dt = std::abs(ts[idx[k].first] - ts[idx[k].second]);
                vals[k] = spherical_oracle(kSl2, lambda, dt, 1e-12)
                              .value.real();
            });
            for (std::size_t k = 0; k < idx.size(); ++k) {
                gram[idx[k].first * n + idx[k].second] = vals[k];
                gram[idx[k].second * n + idx[k].first] = vals[k];
            }
            worst = std::max(worst, -min_eigenvalue_symmetric(gram, n));
        }
        return std::max(0.0, worst);
    });

    return sb.take();
}

SuiteResult suite_decay(const VerifyOptions& opt) {
    SuiteBuilder sb("decay", opt);

    for (const RankOneSpace& sp : {kSl2, RankOneSpace(2, 0)}) {
        const std::string tag = "p" + std::to_string(sp.p);
        sb.check("rate-equals-pi-" + tag, 0.01, [&, sp] {
            auto den =
                bochner_density(sp, SpectralParam::geodesic(Complex(0.0)));
            auto fit = fit_decay_rate(den, 10.0, 50.0);
            return std::abs(fit.rate - kPi) / kPi;
        });
        sb.check("fit-quality-" + tag, 1e-3, [&, sp] {
            auto den =
                bochner_density(sp, SpectralParam::geodesic(Complex(0.0)));
            auto fit = fit_decay_rate(den, 10.0, 50.0);
            return 1.0 - fit.r_squared;
        });
    }

    sb.check("gamma-stirling-envelope", 0.02, [&] {
        double worst = 0.0;
        for (double y : {20.0, 40.0, 80.0}) {
            const double g = std::abs(gamma(Complex(0.25, y)));
            const double env = gamma_magnitude_envelope(0.25, y);
            worst = std::max(worst, std::abs(g / env - 1.0));
        }
        return worst;
    });

    return sb.take();
}

SuiteResult suite_singularity(const VerifyOptions& opt) {
    SuiteBuilder sb("singularity", opt);
    auto den = bochner_density(kSl2, SpectralParam::geodesic(Complex(0.0)));

    sb.check("finite-near-boundary", 0.0, [&] {
        const Complex v = phi_via_bochner(den, Complex(0.0, kPi - 0.05),
                                          1e-8).value;
        return std::isfinite(v.real()) && v.real() > 1.0 ? 0.0 : 1.0;
    });

    const std::vector<double> eps{0.4, 0.3, 0.2, 0.15, 0.1, 0.07};

    sb.check("log-blowup-fit", 0.02, [&] {
        auto fit = singularity_probe(den, eps);
        if (fit.c_log <= 0.0) return 1.0;
        return fit.fit_quality;
    });

    sb.check("sixth-point-prediction", 0.03, [&] {
        auto fit = singularity_probe(den, eps);
        return fit.prediction_error;
    });

    sb.check("imaginary-axis-reflection", 1e-9, [&] {
        double worst = 0.0;
        for (double e : {0.3, 0.1}) {
            const Complex a =
                phi_via_bochner(den, Complex(0.0, kPi - e), 1e-9).value;
            const Complex b =
                phi_via_bochner(den, Complex(0.0, -(kPi - e)), 1e-9).value;
            worst = std::max(worst, std::abs(a - b));
        }
        return worst;
    });

    sb.check("tube-convexity-monotone", 0.0, [&] {
        // damped integrand converges at three nested heights and the values
        // increase toward the boundary
        const double v1 = phi_via_bochner(den, Complex(0.0, 1.0)).value.real();
        const double v2 = phi_via_bochner(den, Complex(0.0, 2.0)).value.real();
        const double v3 = phi_via_bochner(den, Complex(0.0, 2.9)).value.real();
        const bool ok = std::isfinite(v1) && std::isfinite(v2) &&
                        std::isfinite(v3) && 1.0 <= v1 && v1 < v2 && v2 < v3;
        return ok ? 0.0 : 1.0;
    });

    return sb.take();
}

SuiteResult suite_abel(const VerifyOptions& opt) {
    SuiteBuilder sb("abel", opt);
    const std::vector<double> lam_grid{0.3, 0.7, 1.2, 1.9, 2.6};

    for (double sigma : {0.6, 1.0, 1.5}) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "fourier-identity-w%.1f", sigma);
        sb.check(buf, 1e-4, [&, sigma] {
            return abel_fourier_identity(truncated_gaussian(sigma), lam_grid);
        });
    }

    sb.check("weyl-evenness", 1e-8, [&] {
        auto f = truncated_gaussian(1.0);
        double worst = 0.0;
        for (double t : {0.3, 1.0, 2.0})
            worst = std::max(worst, std::abs(abel_transform_at(f, t) -
                                             abel_transform_at(f, -t)));
        return worst;
    });

    sb.check("support-preservation", 1e-10, [&] {
        auto f = truncated_gaussian(0.6); // support 3.6
        return std::abs(abel_transform_at(f, f.support_bound + 0.1));
    });

    sb.check("duality-pairing", 1e-4, [&] {
        // <A f, cos(lam .)> over A equals <f, phi_lam> against the radial
        // measure
        auto f = truncated_gaussian(1.0);
        const double R = f.effective_support();
        double worst = 0.0;
        for (double lam : {0.5, 1.4}) {
            auto lhs = integrate_adaptive_real(
                [&](double t) {
                    return abel_transform_at(f, t) * std::cos(lam * t);
                },
                -R, R, 1e-10, 4000);
            auto rhs = integrate_adaptive_real(
                [&](double t) {
                    return f.profile(t) *
                           spherical_oracle(
                               kSl2, SpectralParam::geodesic(Complex(lam)), t)
                               .value.real() *
                           kRadialJacobian * std::sinh(t);
                },
                0.0, R, 1e-10, 4000);
            worst = std::max(worst, std::abs(lhs.value.real() -
                                             rhs.value.real()) /
                                        std::abs(rhs.value.real()));
        }
        return worst;
    });

    return sb.take();
}

SuiteResult suite_spectral_ff(const VerifyOptions& opt) {
    SuiteBuilder sb("spectral-ff", opt);

    for (double sigma : {0.6, 1.0, 1.5}) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "roundtrip-w%.1f", sigma);
        sb.check(buf, 1e-3, [&, sigma] {
            return spectral_roundtrip(truncated_gaussian(sigma));
        });
    }

    sb.check("ffs-evenness", 1e-9, [&] {
        auto f = truncated_gaussian(1.0);
        auto grid = symmetric_grid(16.0, 0.04);
        auto prof = spherical_transform(f, grid);
        const std::vector<double> up{0.5, 1.5, 3.0};
        const std::vector<double> um{-0.5, -1.5, -3.0};
        auto a = spectral_ff(prof, up);
        auto b = spectral_ff(prof, um);
        double worst = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            worst = std::max(worst, std::abs(a[i] - b[i]));
        return worst;
    });

    sb.check("inversion-roundtrip", 1e-4, [&] {
        auto f = truncated_gaussian(1.0);
        auto grid = symmetric_grid(16.0, 0.04);
        auto prof = spherical_transform(f, grid);
        auto ts = linspace(0.0, 4.0, 17);
        auto rec = inverse_spherical(prof, ts, f.effective_support());
        double sup = 0.0, worst = 0.0;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            sup = std::max(sup, std::abs(f.profile(ts[i])));
            worst = std::max(worst, std::abs(rec[i] - f.profile(ts[i])));
        }
        return worst / sup;
    });

    return sb.take();
}

SuiteResult suite_theorem41(const VerifyOptions& opt) {
    SuiteBuilder sb("theorem41", opt);
    const std::vector<double> samples{-3.0, -1.7, -0.8, 0.0,
                                      0.6,  1.3,  2.2,  3.0};

    struct PairSpec {
        double lam;
        AdaptedVector f, g;
    };
    std::vector<PairSpec> pairs;
    {
        auto l1 = SpectralParam::geodesic(Complex(0.6));
        pairs.push_back({0.6, bump_vector(l1, +1, 0.0, 1.5),
                         bump_vector(l1, +1, 0.5, 1.5)});
        auto l2 = SpectralParam::geodesic(Complex(1.1));
        pairs.push_back({1.1, bump_vector(l2, +1, -1.0, 2.0),
                         bump_vector(l2, -1, 0.8, 1.7)});
        auto l3 = SpectralParam::geodesic(Complex(1.7));
        pairs.push_back({1.7, bump_vector(l3, -1, 0.3, 1.2),
                         bump_vector(l3, -1, 0.3, 1.2)});
    }

    for (std::size_t i = 0; i < pairs.size(); ++i) {
        sb.check("coefficient-pair" + std::to_string(i + 1), 1e-6, [&, i] {
            return theorem_41_check(kSl2, pairs[i].f, pairs[i].g, samples);
        });
    }

    sb.check("parseval-s0", 1e-8, [&] {
        // s = 0 reduces to the Parseval identity
        const auto& p = pairs[0];
        const Complex direct = adapted_pairing(kSl2, p.f, p.g);
        const Complex viam = coefficient_via_bochner(kSl2, p.f, p.g, 0.0);
        return std::abs(direct - viam);
    });

    return sb.take();
}

SuiteResult suite_theorem51(const VerifyOptions& opt) {
    SuiteBuilder sb("theorem51", opt);
    const std::vector<double> samples{-3.0, -1.5, -0.5, 0.0,
                                      0.5,  1.0,  2.0,  2.8};
    const Complex ells[4] = {{0.3, 0.0}, {0.5, 0.0}, {0.3, 0.4}, {0.9, 0.0}};

    for (const Complex& ell : ells) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "kfixed-(%g%+gi)rho", ell.real(),
                      ell.imag());
        std::optional<Theorem51Result> cached;
        auto get = [&]() -> const Theorem51Result& {
            if (!cached)
                cached = theorem_51_check(kSl2, SpectralParam::rho(ell),
                                          samples);
            return *cached;
        };
        sb.check(std::string("coefficient-") + buf, 1e-5,
                 [&] { return get().coefficient_defect; });
        sb.check(std::string("density-") + buf, 1e-6,
                 [&] { return get().density_defect; });
    }

    return sb.take();
}

} // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names{
        "master-integral", "bochner",     "routes",    "positivity",
        "decay",           "singularity", "abel",      "spectral-ff",
        "theorem41",       "theorem51"};
    return names;
}

SuiteResult run_verify_suite(const std::string& suite,
                             const VerifyOptions& opt) {
    if (suite == "master-integral") return suite_master_integral(opt);
    if (suite == "bochner") return suite_bochner(opt);
    if (suite == "routes") return suite_routes(opt);
    if (suite == "positivity") return suite_positivity(opt);
    if (suite == "decay") return suite_decay(opt);
    if (suite == "singularity") return suite_singularity(opt);
    if (suite == "abel") return suite_abel(opt);
    if (suite == "spectral-ff") return suite_spectral_ff(opt);
    if (suite == "theorem41") return suite_theorem41(opt);
    if (suite == "theorem51") return suite_theorem51(opt);
    throw DomainError(ErrorCode::InvalidArgument,
                      "unknown verify suite: " + suite);
}

} // namespace zsf
