#include "zsf/spherical.hpp"

#include <cmath>

#include "zsf/errors.hpp"
#include "zsf/parallel.hpp"
#include "zsf/quadrature.hpp"
#include "zsf/specfun.hpp"

namespace zsf {

const char* phi_method_name(PhiMethod m) {
    switch (m) {
        case PhiMethod::BochnerFourier: return "bochner";
        case PhiMethod::HcSeries: return "series";
        case PhiMethod::Oracle: return "oracle";
    }
    return "?";
}

SphericalValue phi_via_bochner(const BochnerDensity& density, Complex t,
                               double abs_tol) {
    const double y = std::abs(t.imag());
    if (y >= kPi)
        throw DomainError(ErrorCode::OutsideTube, "|Im t| must be < pi");
    const bool slow = (kPi - y) < 0.02;

    const double U = density.truncation(abs_tol * 1e-2, y);
    // m is even in upsilon: fold to [0, U]. Each exponential half carries its
    // own damping factor and is paired with the density in log space, so
    // nothing overflows near the tube boundary.
    const double x = t.real(), ty = t.imag();
    auto integrand = [&](double u) {
        const Complex osc_m = std::exp(Complex(0.0, -u * x));
        return osc_m * density.value_damped(u, ty) +
               std::conj(osc_m) * density.value_damped(u, -ty);
    };

    // panel decomposition: oscillation scale from Re t
    const double osc = std::max(1.0, std::abs(x));
    const double panel_w = std::min(2.0 * kPi / osc, 8.0);
    const int n_panels = static_cast<int>(std::ceil(U / panel_w));
    std::vector<QuadResult> panels(n_panels);
    parallel_for_index(static_cast<std::size_t>(n_panels), [&](std::size_t i) {
        const double a = panel_w * double(i);
        const double b = std::min(U, a + panel_w);
        panels[i] = integrate_adaptive(integrand, a, b,
                                       abs_tol / (2.0 * n_panels), 600);
    });
    Complex total{0.0, 0.0};
    double err = 0.0;
    for (const auto& p : panels) {
        total += p.value;
        err += p.abs_err;
    }
    // tail estimate from the damped Stirling envelope
    const double tail =
        2.0 * std::abs(density.value_damped(U, y)) / (kPi - y);
    SphericalValue out;
    out.value = total;
    out.method = PhiMethod::BochnerFourier;
    out.abs_err = err + tail;
    if (slow) out.abs_err = std::max(out.abs_err * 10.0, 1e-6);
    return out;
}

SphericalValue phi_via_bochner(const RankOneSpace& space,
                               const SpectralParam& lambda, Complex t,
                               double abs_tol) {
    return phi_via_bochner(bochner_density(space, lambda), t, abs_tol);
}

namespace {

void check_series_domain(const RankOneSpace& space,
                         const SpectralParam& lambda) {
    if (space.q != 0)
        throw DomainError(ErrorCode::UnsupportedSpace,
                          "residue series needs q = 0");
    const Complex ell = lambda.geodesic_dual(space);
    if (std::abs(ell.imag()) > 1e-12)
        throw DomainError(ErrorCode::OutOfStrip,
                          "residue series needs unitary lambda");
    if (std::abs(ell) < 1e-8)
        throw NumericError(ErrorCode::SpectralPole,
                           "lambda = 0 is a double pole of the integrand");
}

Complex series_coefficient(double r, double ell, int k) {
    // N_k(ell) without the 4 pi C prefactor
    const Complex il(0.0, ell);
    const double two_r = 2.0 * r;
    return gamma_residue(k) *
           std::exp(ln_gamma(Complex(two_r + k)) + ln_gamma(two_r + k + il) +
                    ln_gamma(Complex(-double(k)) - il) -
                    ln_gamma(two_r + il) - ln_gamma(two_r - il));
}

double unit_mass_constant(double r) {
    return std::exp(ln_gamma(Complex(4.0 * r)) -
                    2.0 * ln_gamma(Complex(2.0 * r)))
               .real() /
           (4.0 * kPi);
}

} // namespace

std::vector<HcSeriesTerm> hc_series_terms(const RankOneSpace& space,
                                          const SpectralParam& lambda,
                                          int terms) {
    check_series_domain(space, lambda);
    const double r = space.r();
    const double ell = lambda.geodesic_dual(space).real();
    const double pref = 4.0 * kPi * unit_mass_constant(r);
    std::vector<HcSeriesTerm> out;
    out.reserve(2 * terms);
    for (int k = 0; k < terms; ++k) {
        for (int sign : {-1, +1}) {
            // the e^{+i sign l t} branch carries N_k(-sign l); at k = 0 the
            // +1 branch is c(l) e^{(il-rho)t} with the c-function coefficient
            HcSeriesTerm term;
            term.k = k;
            term.weyl_sign = sign;
            term.coefficient = pref * series_coefficient(r, -sign * ell, k);
            term.exponent = 2.0 * r + 2.0 * k;
            out.push_back(term);
        }
    }
    return out;
}

SphericalValue phi_hc_series(const RankOneSpace& space,
                             const SpectralParam& lambda, double t,
                             int max_terms, double abs_tol) {
    check_series_domain(space, lambda);
    if (!(t > 0.0))
        throw DomainError(ErrorCode::InvalidArgument,
                          "series route needs t > 0");
    const double r = space.r();
    const double ell = lambda.geodesic_dual(space).real();
    const double pref = 4.0 * kPi * unit_mass_constant(r);
    const Complex il(0.0, ell);

    Complex sum{0.0, 0.0};
    double prev_mag = 0.0;
    double tail = 0.0;
    const double ratio_limit = std::exp(-2.0 * t);
    for (int k = 0; k < max_terms; ++k) {
        const Complex term =
            pref * (series_coefficient(r, ell, k) *
                        std::exp((-il - 2.0 * r - 2.0 * k) * t) +
                    series_coefficient(r, -ell, k) *
                        std::exp((il - 2.0 * r - 2.0 * k) * t));
        sum += term;
        const double mag = std::abs(term);
        // geometric tail bound once the e^{-2t} regime is visible
        double ratio = ratio_limit;
        if (prev_mag > 0.0 && mag > 0.0)
            ratio = std::max(ratio_limit, std::min(0.9, mag / prev_mag));
        tail = mag * ratio / (1.0 - ratio);
        prev_mag = mag;
        if (k >= 2 && tail <= abs_tol) {
            return SphericalValue{sum, PhiMethod::HcSeries, tail + 1e-14};
        }
    }
    if (tail > abs_tol * 100.0)
        throw NumericError(ErrorCode::NeedMoreTerms,
                           "series tail bound above tolerance");
    return SphericalValue{sum, PhiMethod::HcSeries, tail + 1e-14};
}

Complex hc_leading_coefficient(const RankOneSpace& space,
                               const SpectralParam& lambda) {
    check_series_domain(space, lambda);
    const double r = space.r();
    const Complex il(0.0, lambda.geodesic_dual(space).real());
    return std::exp(ln_gamma(Complex(4.0 * r)) - ln_gamma(Complex(2.0 * r)) +
                    ln_gamma(il) - ln_gamma(2.0 * r + il));
}

SingularityFit singularity_probe(const BochnerDensity& density,
                                 const std::vector<double>& eps_grid) {
    if (eps_grid.size() < 6)
        throw DomainError(ErrorCode::InvalidArgument,
                          "need at least 6 epsilon values");
    for (double e : eps_grid)
        if (!(e > 0.0 && e <= 0.5))
            throw DomainError(ErrorCode::InvalidArgument,
                              "epsilon values must lie in (0, 0.5]");

    const std::size_t n = eps_grid.size();
    std::vector<double> xs(n), ys(n);
    parallel_for_index(n, [&](std::size_t i) {
        const Complex t(0.0, kPi - eps_grid[i]);
        xs[i] = std::log(1.0 / eps_grid[i]);
        ys[i] = phi_via_bochner(density, t, 1e-8).value.real();
    });

    LinearFit full = linear_least_squares(xs, ys);
    double range = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            range = std::max(range, std::abs(ys[i] - ys[j]));

    // leave-last-out cross-validation (last = smallest epsilon if sorted
    // decreasing): refit on all but the final point, predict it
    std::vector<double> xs0(xs.begin(), xs.end() - 1);
    std::vector<double> ys0(ys.begin(), ys.end() - 1);
    LinearFit part = linear_least_squares(xs0, ys0);
    const double pred = part.intercept + part.slope * xs.back();

    SingularityFit fit;
    fit.c_log = full.slope;
    fit.c_const = full.intercept;
    fit.fit_quality = range > 0 ? full.max_residual / range : 0.0;
    fit.prediction_error =
        range > 0 ? std::abs(pred - ys.back()) / range : 0.0;
    return fit;
}

std::vector<SphericalValue> phi_grid(const BochnerDensity& density,
                                     const std::vector<Complex>& ts,
                                     double abs_tol) {
    std::vector<SphericalValue> out(ts.size());
    parallel_for_index(ts.size(), [&](std::size_t i) {
        out[i] = phi_via_bochner(density, ts[i], abs_tol);
    });
    return out;
}

std::vector<SphericalValue> phi_grid_serial(const BochnerDensity& density,
                                            const std::vector<Complex>& ts,
                                            double abs_tol) {
    std::vector<SphericalValue> out(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i)
        out[i] = phi_via_bochner(density, ts[i], abs_tol);
    return out;
}

} // namespace zsf
