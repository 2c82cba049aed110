#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "zsf/bochner.hpp"
#include "zsf/errors.hpp"
#include "zsf/rankone.hpp"
#include "zsf/repsim.hpp"
#include "zsf/spherical.hpp"
#include "helpers.hpp"

using zsf::AdaptedVector;
using zsf::Complex;
using zsf::RankOneSpace;
using zsf::SpectralParam;

static const RankOneSpace sl2 = RankOneSpace::sl2r();

TEST_CASE("adapted action: identity, group law, unitarity") {
    const SpectralParam lam = SpectralParam::geodesic(Complex(0.8));
    auto f = zsf::k_fixed_adapted_vector(sl2, lam);

    auto id = zsf::adapted_action(sl2, lam, 0.0, f);
    for (double s : {-2.0, 0.3, 1.4})
        CHECK(std::abs(id.eval(+1, s) - f.eval(+1, s)) < 1e-15);

    // U(a)U(b) = U(a+b) pointwise
    auto ab = zsf::adapted_action(sl2, lam, 0.7,
                                  zsf::adapted_action(sl2, lam, -1.9, f));
    auto once = zsf::adapted_action(sl2, lam, -1.2, f);
    for (double s : {-1.0, 0.0, 2.5})
        CHECK(std::abs(ab.eval(+1, s) - once.eval(+1, s)) < 1e-12);

    // unitary lambda: the action preserves the orbit norm
    const double n0 = zsf::orbit_norm_sq(sl2, f);
    const double n1 = zsf::orbit_norm_sq(sl2,
                                         zsf::adapted_action(sl2, lam, 1.3,
                                                             f));
    CHECK(std::abs(n1 - n0) < 1e-10 * n0);

    CHECK_THROWS_AS(zsf::adapted_action(sl2,
                                        SpectralParam::geodesic(Complex(0.4)),
                                        1.0, f),
                    zsf::DomainError); // RealizationMismatch
}

TEST_CASE("K-fixed orbit norm is finite across the strip") {
    for (Complex ell : {Complex(0.0, 0.0), Complex(0.9, 0.0),
                        Complex(0.5, 0.3), Complex(-0.6, 1.0)}) {
        auto f = zsf::k_fixed_adapted_vector(sl2, SpectralParam::rho(ell));
        const double n = zsf::orbit_norm_sq(sl2, f);
        CHECK(std::isfinite(n));
        CHECK(n > 0.0);
    }
}

TEST_CASE("duality pairing identity") {
    // (U(lambda)(a_s) f, g) = (f, U(lambda')(a_{-s}) g)
    for (Complex ell : {Complex(0.0, 0.9), Complex(0.4, 0.0)}) {
        const SpectralParam lam = SpectralParam::rho(ell);
        const SpectralParam lamp = lam.contragredient(sl2);
        auto f = zsf::k_fixed_adapted_vector(sl2, lam);
        auto g = zsf::k_fixed_adapted_vector(sl2, lamp);
        for (double s : {-1.1, 0.8}) {
            const Complex lhs = zsf::adapted_pairing(
                sl2, zsf::adapted_action(sl2, lam, s, f), g);
            const Complex rhs = zsf::adapted_pairing(
                sl2, f, zsf::adapted_action(sl2, lamp, -s, g));
            CHECK(std::abs(lhs - rhs) < 1e-10 * (1.0 + std::abs(rhs)));
        }
    }
}

TEST_CASE("pairing is invariant under simultaneous translation") {
    const SpectralParam lam = SpectralParam::rho(Complex(0.0, 1.2));
    const SpectralParam lamp = lam.contragredient(sl2);
    auto f = zsf::k_fixed_adapted_vector(sl2, lam);
    auto g = zsf::k_fixed_adapted_vector(sl2, lamp);
    const Complex base = zsf::adapted_pairing(sl2, f, g);
    for (double s : {-0.9, 1.7}) {
        const Complex moved = zsf::adapted_pairing(
            sl2, zsf::adapted_action(sl2, lam, s, f),
            zsf::adapted_action(sl2, lamp, s, g));
        CHECK(std::abs(moved - base) < 1e-10 * std::abs(base));
    }
}

TEST_CASE("matrix coefficient of the K-fixed pair reproduces phi_lambda") {
    const SpectralParam lam = SpectralParam::geodesic(Complex(0.8));
    auto f = zsf::k_fixed_adapted_vector(sl2, lam);
    auto g = zsf::k_fixed_adapted_vector(sl2, lam.contragredient(sl2));
    const std::vector<double> ss{0.0, 0.5, 1.5, 3.0};
    auto coeff = zsf::matrix_coefficient_direct(sl2, f, g, ss);
    CHECK(coeff.values[0].real() > 0.0); // ||f||^2 at s = 0
    for (std::size_t i = 1; i < ss.size(); ++i) {
        const Complex normalized = coeff.values[i] / coeff.values[0];
        const Complex phi =
            zsf::spherical_oracle(sl2, lam, ss[i]).value;
        CHECK(std::abs(normalized - phi) < 1e-6);
    }
}

TEST_CASE("positive definiteness of c_{f,f} samples (unitary)") {
    const SpectralParam lam = SpectralParam::geodesic(Complex(1.1));
    auto f = zsf::bump_vector(lam, +1, 0.2, 1.4);
    const double pts[6] = {-2.4, -1.0, -0.3, 0.6, 1.5, 2.9};
    std::vector<double> ss;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) ss.push_back(pts[i] - pts[j]);
    auto coeff = zsf::matrix_coefficient_direct(sl2, f, f, ss);
    std::vector<double> gram(36);
    for (int i = 0; i < 36; ++i) gram[i] = coeff.values[i].real();
    CHECK(zsf_test::min_eig_sym(gram, 6) >= -1e-8);
}

TEST_CASE("translation covariance of the modified transform") {
    const SpectralParam lam = SpectralParam::geodesic(Complex(0.9));
    auto f = zsf::bump_vector(lam, +1, -0.4, 1.8);
    const double shift = 0.85;
    auto moved = zsf::adapted_action(sl2, lam, shift, f);
    for (double u : {0.3, 1.9}) {
        const Complex a = zsf::adapted_transform(sl2, moved, u, +1);
        const Complex b = std::exp(Complex(0.0, -u * shift)) *
                          zsf::adapted_transform(sl2, f, u, +1);
        CHECK(std::abs(a - b) < 1e-10 * (1.0 + std::abs(b)));
    }
}

TEST_CASE("pair density is nonnegative on the diagonal (unitary)") {
    const SpectralParam lam = SpectralParam::geodesic(Complex(1.3));
    auto f = zsf::bump_vector(lam, +1, 0.0, 1.5);
    std::vector<double> grid;
    for (double u = -12.0; u <= 12.0; u += 0.5) grid.push_back(u);
    auto m = zsf::bochner_from_vectors(sl2, f, f, grid);
    for (const Complex& v : m) {
        CHECK(v.real() >= -1e-12);
        CHECK(std::abs(v.imag()) < 1e-12);
    }
}

TEST_CASE("theorem 4.1: direct coefficient equals the Fourier integral") {
    const SpectralParam lam = SpectralParam::geodesic(Complex(0.7));
    auto f = zsf::bump_vector(lam, +1, 0.0, 1.6);
    auto g = zsf::bump_vector(lam, +1, 0.4, 1.6);
    const std::vector<double> ss{-2.0, -0.7, 0.0, 1.2, 2.4};
    CHECK(zsf::theorem_41_check(sl2, f, g, ss) < 1e-6);

    // Parseval at s = 0
    const Complex direct = zsf::adapted_pairing(sl2, f, g);
    const Complex viam = zsf::coefficient_via_bochner(sl2, f, g, 0.0);
    CHECK(std::abs(direct - viam) < 1e-8);
}

TEST_CASE("theorem 5.1 on the K-fixed pair (one strip point)") {
    const auto res = zsf::theorem_51_check(
        sl2, SpectralParam::rho(Complex(0.3)), {-1.5, 0.0, 0.5, 1.5});
    CHECK(res.coefficient_defect < 1e-5);
    CHECK(res.density_defect < 1e-6);
    CHECK_THROWS_AS(zsf::theorem_51_check(sl2,
                                          SpectralParam::rho(Complex(1.2)),
                                          {0.0}),
                    zsf::DomainError);
}

TEST_CASE("K-fixed twisted profiles decay at the predicted exponential rate") {
    // two-chamber estimate: the twisted lambda-profile decays like
    // e^{-(1+Re ell)|s|/2}, the contragredient like e^{-(1-Re ell)|s|/2}
    const double ell = 0.4;
    auto rate = [&](const AdaptedVector& v, double sign) {
        const Complex lgd = v.lambda.geodesic_dual(sl2);
        auto tw = [&](double s) {
            return std::abs(std::exp(Complex(0.0, -1.0) * lgd * s) *
                            v.eval(+1, s));
        };
        const double s1 = sign * 20.0, s2 = sign * 30.0;
        return -std::log(tw(s2) / tw(s1)) / (std::abs(s2) - std::abs(s1));
    };
    auto f = zsf::k_fixed_adapted_vector(sl2, SpectralParam::rho(Complex(ell)));
    auto g = zsf::k_fixed_adapted_vector(
        sl2, SpectralParam::rho(Complex(ell)).contragredient(sl2));
    for (double sign : {1.0, -1.0}) {
        CHECK(std::abs(rate(f, sign) - 0.5 * (1.0 + ell)) <
              0.05 * 0.5 * (1.0 + ell));
        CHECK(std::abs(rate(g, sign) - 0.5 * (1.0 - ell)) <
              0.05 * 0.5 * (1.0 - ell));
    }
}

TEST_CASE("contragredient mismatch is rejected") {
    const SpectralParam lam = SpectralParam::rho(Complex(0.4));
    auto f = zsf::k_fixed_adapted_vector(sl2, lam);
    auto g_wrong = zsf::k_fixed_adapted_vector(sl2, lam); // not lambda'
    CHECK_THROWS_AS(zsf::matrix_coefficient_direct(sl2, f, g_wrong, {0.0}),
                    zsf::DomainError);
}
