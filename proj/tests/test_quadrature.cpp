#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "zsf/quadrature.hpp"

using zsf::Complex;

TEST_CASE("adaptive GK on smooth integrands") {
    auto r1 = zsf::integrate_adaptive_real([](double x) { return x * x; },
                                           0.0, 1.0, 1e-12);
    CHECK(std::abs(r1.value.real() - 1.0 / 3.0) < 1e-13);

    auto r2 = zsf::integrate_adaptive_real([](double x) { return std::sin(x); },
                                           0.0, zsf::kPi, 1e-12);
    CHECK(std::abs(r2.value.real() - 2.0) < 1e-12);
    CHECK(r2.abs_err < 1e-10);
}

TEST_CASE("adaptive GK on an oscillatory decaying integrand") {
    // int_0^X e^{-x} cos(bx) dx = (1 - e^{-X}(cos bX - b sin bX)) / (1+b^2)
    const double b = 7.0, X = 10.0;
    const double want =
        (1.0 - std::exp(-X) * (std::cos(b * X) - b * std::sin(b * X))) /
        (1.0 + b * b);
    auto r = zsf::integrate_adaptive_real(
        [b](double x) { return std::exp(-x) * std::cos(b * x); }, 0.0, X,
        1e-12);
    CHECK(std::abs(r.value.real() - want) < 1e-11);
}

TEST_CASE("adaptive GK with endpoint-vanishing weight") {
    // int_0^pi sin^4 = 3 pi / 8
    auto r = zsf::integrate_adaptive_real(
        [](double x) { return std::pow(std::sin(x), 4); }, 0.0, zsf::kPi,
        1e-12);
    CHECK(std::abs(r.value.real() - 3.0 * zsf::kPi / 8.0) < 1e-12);
}

TEST_CASE("filon matches adaptive quadrature on oscillatory transforms") {
    // int_{-20}^{20} e^{-x^2/8} e^{-isx} dx, strongly oscillatory at s = 9
    const double s = 9.0;
    auto f = [](double x) { return Complex(std::exp(-x * x / 8.0), 0.0); };
    const double a = -20.0, h = 0.01;
    const int n = 4001;
    std::vector<Complex> samples(n);
    for (int i = 0; i < n; ++i) samples[i] = f(a + h * i);
    const Complex filon = zsf::filon_integral(samples, a, h, s);

    auto ref = zsf::integrate_adaptive(
        [&](double x) { return f(x) * std::exp(Complex(0.0, -s * x)); }, a,
        -a, 1e-13, 20000);
    CHECK(std::abs(filon - ref.value) < 1e-10);

    // exact answer: sqrt(8 pi) e^{-2 s^2} is ~1e-70 here, so also check a
    // moderate frequency against the Gaussian transform closed form
    const double s2 = 1.0;
    const Complex filon2 = zsf::filon_integral(samples, a, h, s2);
    const double want = std::sqrt(8.0 * zsf::kPi) * std::exp(-2.0 * s2 * s2);
    CHECK(std::abs(filon2.real() - want) < 5e-10);
    CHECK(std::abs(filon2.imag()) < 1e-12);
}

TEST_CASE("filon handles s = 0 and tiny s h (series branch)") {
    const double a = 0.0, h = 0.002;
    const int n = 1001;
    std::vector<Complex> samples(n);
    for (int i = 0; i < n; ++i) {
        const double x = a + h * i;
        samples[i] = Complex(std::cos(x), 0.0);
    }
    const double X = h * (n - 1);
    const Complex at0 = zsf::filon_integral(samples, a, h, 0.0);
    CHECK(std::abs(at0.real() - std::sin(X)) < 1e-12);
    const Complex small = zsf::filon_integral(samples, a, h, 1e-4);
    CHECK(std::abs(small.real() - std::sin(X)) < 1e-6);
}

TEST_CASE("error estimates are usable") {
    auto r = zsf::integrate_adaptive_real(
        [](double x) { return std::exp(-x * x); }, -6.0, 6.0, 1e-11);
    const double want = std::sqrt(zsf::kPi);
    CHECK(std::abs(r.value.real() - want) <= 10.0 * r.abs_err + 1e-13);
}
