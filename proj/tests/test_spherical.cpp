#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "zsf/bochner.hpp"
#include "zsf/errors.hpp"
#include "zsf/rankone.hpp"
#include "zsf/specfun.hpp"
#include "zsf/spherical.hpp"
#include "helpers.hpp"

using zsf::Complex;
using zsf::RankOneSpace;
using zsf::SpectralParam;

static const RankOneSpace sl2 = RankOneSpace::sl2r();

TEST_CASE("phi via the density: normalization and oracle agreement") {
    for (double lg : {0.0, 1.0}) {
        auto den = zsf::bochner_density(sl2,
                                        SpectralParam::geodesic(Complex(lg)));
        const auto at0 = zsf::phi_via_bochner(den, Complex(0.0));
        CHECK(std::abs(at0.value - Complex(1.0)) < 1e-8);
    }
    const SpectralParam lam = SpectralParam::geodesic(Complex(0.0));
    auto den = zsf::bochner_density(sl2, lam);
    const auto v = zsf::phi_via_bochner(den, Complex(1.5));
    const auto o = zsf::spherical_oracle(sl2, lam, 1.5);
    CHECK(std::abs(v.value - o.value) < 1e-7);
    CHECK(std::abs(v.value.imag()) <= 10.0 * v.abs_err);
}

TEST_CASE("phi in the tube") {
    auto den = zsf::bochner_density(sl2, SpectralParam::geodesic(Complex(0.0)));
    // frozen reference at t = 2.5i
    const auto v = zsf::phi_via_bochner(den, Complex(0.0, 2.5));
    CHECK(std::abs(v.value.real() - 1.642982398445766216659) < 1e-7);
    CHECK(std::abs(v.value.imag()) < 1e-9);
    CHECK(v.value.real() >= 1.0);

    CHECK_THROWS_AS(zsf::phi_via_bochner(den, Complex(0.0, 3.2)),
                    zsf::DomainError);

    // reflection in the imaginary direction
    const auto a = zsf::phi_via_bochner(den, Complex(0.4, 1.9));
    const auto b = zsf::phi_via_bochner(den, Complex(0.4, -1.9));
    CHECK(std::abs(a.value - std::conj(b.value)) < 1e-9);
}

TEST_CASE("phi Weyl invariance through the density") {
    for (double t : {0.6, 2.2}) {
        const auto p = zsf::phi_via_bochner(sl2,
                                            SpectralParam::geodesic(
                                                Complex(1.4)),
                                            Complex(t));
        const auto m = zsf::phi_via_bochner(sl2,
                                            SpectralParam::geodesic(
                                                Complex(-1.4)),
                                            Complex(t));
        CHECK(std::abs(p.value - m.value) < 1e-10);
    }
}

TEST_CASE("residue series against the other routes") {
    const SpectralParam lam = SpectralParam::geodesic(Complex(1.0));
    // t = 1, 25 terms against the K-integral oracle
    const auto s = zsf::phi_hc_series(sl2, lam, 1.0, 25, 1e-10);
    const auto o = zsf::spherical_oracle(sl2, lam, 1.0);
    CHECK(std::abs(s.value - o.value) < 1e-8);

    // large t: the two k = 0 Weyl terms already match; the residual is the
    // k >= 1 tail, which shrinks by e^{-2} per unit of t
    auto terms = zsf::hc_series_terms(sl2, lam, 1);
    REQUIRE(terms.size() == 2);
    auto leading_at = [&](double t) {
        Complex sum{0.0, 0.0};
        for (const auto& term : terms) {
            const Complex il(0.0, term.weyl_sign * 1.0);
            sum += term.coefficient * std::exp((il - term.exponent) * t);
        }
        return sum;
    };
    const auto at5 = zsf::phi_via_bochner(sl2, lam, Complex(5.0), 1e-10);
    CHECK(std::abs(leading_at(5.0) - at5.value) < 5e-6);
    const auto at6 = zsf::phi_via_bochner(sl2, lam, Complex(6.0), 1e-10);
    CHECK(std::abs(leading_at(6.0) - at6.value) < 1e-6);
}

TEST_CASE("residue series for p = 3") {
    const RankOneSpace so41(3, 0);
    const SpectralParam lam = SpectralParam::geodesic(Complex(2.0));
    const auto s = zsf::phi_hc_series(so41, lam, 2.0, 40, 1e-10);
    // frozen reference (offline evaluation of the density transform)
    CHECK(std::abs(s.value.real() - (-0.02045491447610403728734)) < 1e-9);
    CHECK(std::abs(s.value.imag()) < 1e-10);
}

TEST_CASE("series term ratio approaches e^{-2t} like 1 + O(1/k)") {
    const SpectralParam lam = SpectralParam::geodesic(Complex(0.7));
    const double t = 1.0;
    const int K = 42;
    auto terms = zsf::hc_series_terms(sl2, lam, K);
    // |term_{k+1}/term_k| for the summed two-sign terms
    std::vector<double> mags(K, 0.0);
    for (const auto& term : terms) {
        const Complex il(0.0, term.weyl_sign * 0.7);
        mags[term.k] += std::abs(term.coefficient *
                                 std::exp((il - term.exponent) * t));
    }
    for (int k = 10; k + 1 < K; ++k) {
        const double dev =
            std::abs(mags[k + 1] / mags[k] / std::exp(-2.0 * t) - 1.0);
        // the 1/k coefficient is (2r-1)^2-ish order one for p = 1
        CHECK(dev < 1.5 / k);
        if (k >= 25) CHECK(dev < 0.05);
    }
}

TEST_CASE("series domain errors") {
    CHECK_THROWS_AS(zsf::phi_hc_series(sl2,
                                       SpectralParam::geodesic(Complex(0.0)),
                                       1.0),
                    zsf::NumericError); // SpectralPole
    CHECK_THROWS_AS(zsf::phi_hc_series(RankOneSpace(2, 1),
                                       SpectralParam::geodesic(Complex(1.0)),
                                       1.0),
                    zsf::DomainError); // UnsupportedSpace
    CHECK_THROWS_AS(zsf::phi_hc_series(sl2,
                                       SpectralParam::rho(Complex(0.5)),
                                       1.0),
                    zsf::DomainError); // non-unitary
    CHECK_THROWS_AS(zsf::phi_hc_series(sl2,
                                       SpectralParam::geodesic(Complex(1.0)),
                                       0.05, 3),
                    zsf::NumericError); // NeedMoreTerms
}

TEST_CASE("leading coefficient has the Gamma-quotient form") {
    // c(l) = Gamma(4r)/Gamma(2r) * Gamma(il)/Gamma(2r+il); for p=1 the
    // constant against Gamma(il)/Gamma(1/2+il) is 1/sqrt(pi)
    const Complex c = zsf::hc_leading_coefficient(
        sl2, SpectralParam::geodesic(Complex(1.3)));
    const Complex il(0.0, 1.3);
    const Complex quot = std::exp(zsf::ln_gamma(il) - zsf::ln_gamma(0.5 + il));
    CHECK(std::abs(c / quot - 1.0 / std::sqrt(zsf::kPi)) < 1e-13);
}

TEST_CASE("singularity probe near the tube boundary") {
    auto den = zsf::bochner_density(sl2, SpectralParam::geodesic(Complex(0.0)));
    const std::vector<double> eps{0.4, 0.3, 0.2, 0.15, 0.1, 0.07};
    const auto fit = zsf::singularity_probe(den, eps);
    CHECK(fit.c_log > 0.0);
    CHECK(fit.fit_quality <= 0.02);
    CHECK(fit.prediction_error <= 0.03);
    CHECK_THROWS_AS(zsf::singularity_probe(den, {0.3, 0.2, 0.1}),
                    zsf::DomainError);
}

TEST_CASE("positive definiteness sampling (small gram matrix)") {
    const SpectralParam lam = SpectralParam::geodesic(Complex(0.9));
    const double ts[6] = {-2.7, -1.1, -0.2, 0.9, 2.0, 3.4};
    std::vector<double> gram(36);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            gram[i * 6 + j] =
                zsf::spherical_oracle(sl2, lam, std::abs(ts[i] - ts[j]),
                                      1e-12)
                    .value.real();
        }
    CHECK(zsf_test::min_eig_sym(gram, 6) >= -1e-8);
}
