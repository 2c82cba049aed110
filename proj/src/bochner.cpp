#include "zsf/bochner.hpp"

#include <cmath>

#include "zsf/errors.hpp"
#include "zsf/parallel.hpp"
#include "zsf/quadrature.hpp"
#include "zsf/specfun.hpp"

namespace zsf {

namespace {

void check_master_preconditions(Complex a, Complex b, double theta) {
    if (!(a.real() > -1.0))
        throw DomainError(ErrorCode::NonConvergent, "need Re a > -1");
    if (!(2.0 * b.real() - a.real() - 1.0 > 0.0))
        throw DomainError(ErrorCode::NonConvergent, "need Re(2b-a-1) > 0");
    if (theta < 0.0 || theta > 0.5 * kPi + 1e-12)
        throw DomainError(ErrorCode::InvalidArgument,
                          "theta outside [0, pi/2]");
}

void check_strip(const RankOneSpace& space, const SpectralParam& lambda) {
    if (!lambda.in_strip(space))
        throw DomainError(ErrorCode::OutOfStrip,
                          "|Re(lambda in rho-units)| must be < 1");
}

} // namespace

Complex master_integral_quad(Complex a, Complex b, double theta,
                             double abs_tol) {
    check_master_preconditions(a, b, theta);
    // t = e^u compactifies both tails: integrand e^{(a+1)u} at -inf and
    // e^{(a+1-2b)u} at +inf.
    const double d_lo = a.real() + 1.0;
    const double d_hi = 2.0 * b.real() - a.real() - 1.0;
    const double log_cut = std::log(abs_tol) - 8.0;
    const double u_lo = log_cut / d_lo;
    const double u_hi = -log_cut / d_hi;
    const double ct = std::cos(theta);
    auto integrand = [&](double u) {
        const double t = std::exp(u);
        const Complex ln_den = std::log(Complex(1.0 + 2.0 * t * ct + t * t));
        return std::exp((a + 1.0) * u - b * ln_den);
    };
    auto res = integrate_adaptive(integrand, u_lo, u_hi, abs_tol * 0.5, 8000);
    if (res.abs_err > 10.0 * abs_tol)
        throw NumericError(ErrorCode::QuadratureFailure,
                           "master integral quadrature did not converge");
    return res.value;
}

Complex master_integral_closed(Complex a, Complex b, double theta) {
    check_master_preconditions(a, b, theta);
    const double s = std::sin(theta);
    const Complex pref = std::exp(ln_gamma(a + 1.0) +
                                  ln_gamma(2.0 * b - a - 1.0) -
                                  ln_gamma(2.0 * b));
    return pref * gauss_2f1(0.5 * (a + 1.0), b - 0.5 * (a + 1.0), b + 0.5,
                            s * s);
}

Complex f_tilde(const RankOneSpace& space, const SpectralParam& lambda,
                double upsilon_rho, double theta) {
    check_strip(space, lambda);
    if (space.q == 0 && theta != 0.0)
        throw DomainError(ErrorCode::InvalidArgument,
                          "theta must be 0 when q = 0");
    const double r = space.r();
    const Complex ell = lambda.rho_units(space);
    const Complex iu(0.0, upsilon_rho);
    const Complex g1 = r * (1.0 + ell - iu);
    const Complex g2 = r * (1.0 + ell + iu);
    const Complex pref =
        std::exp(ln_gamma(g1) + ln_gamma(g2) - ln_gamma(r * (2.0 + 2.0 * ell)));
    if (theta == 0.0) return pref;
    const double s = std::sin(theta);
    return pref * gauss_2f1(0.5 * g1, 0.5 * g2, r * (1.0 + ell) + 0.5, s * s);
}

CrossSection CrossSection::default_for(const RankOneSpace& space) {
    CrossSection cs;
    const int p = space.p, q = space.q;
    cs.weight = [p, q](double th) {
        return std::pow(std::sin(th), p - 1) * std::pow(std::cos(th), q - 1);
    };
    return cs;
}

BochnerDensity::BochnerDensity(const RankOneSpace& space,
                               const SpectralParam& lambda, CrossSection cs)
    : space_(space), lambda_(lambda), cross_section_(std::move(cs)) {
    check_strip(space, lambda);
    ell_gd_ = lambda.geodesic_dual(space);
    const double two_r = 2.0 * space_.r();
    const Complex i(0.0, 1.0);
    ln_den_ = ln_gamma(two_r + i * ell_gd_) + ln_gamma(two_r - i * ell_gd_);

    if (space_.q == 0) {
        // Unit mass in closed form (Barnes' first lemma):
        //   int m_unnorm du = 4 pi Gamma(2r)^2 / Gamma(4r),
        // independent of lambda throughout the strip.
        const double r = space_.r();
        normalization_ =
            std::exp(ln_gamma(Complex(4.0 * r)) -
                     2.0 * ln_gamma(Complex(2.0 * r)))
                .real() /
            (4.0 * kPi);
    } else {
        // no closed form available: unit mass by quadrature
        normalization_ = 1.0;
        const double U = truncation(1e-12);
        auto mass = integrate_adaptive(
            [this](double u) { return unnormalized(u); }, -U, U, 1e-11, 8000);
        normalization_ = 1.0 / mass.value.real();
    }
}

Complex BochnerDensity::value_damped_unnorm(double upsilon,
                                            double damp) const {
    const double r = space_.r();
    const Complex i(0.0, 1.0);
    const Complex lp = 0.5 * i * (ell_gd_ + upsilon);
    const Complex lm = 0.5 * i * (ell_gd_ - upsilon);
    const Complex gammas = std::exp(ln_gamma(r + lp) + ln_gamma(r + lm) +
                                    ln_gamma(r - lp) + ln_gamma(r - lm) -
                                    ln_den_ + damp * upsilon);
    if (space_.q == 0) return gammas;

    // theta-dependent part: product of the two hypergeometric factors
    const Complex ell = lambda_.rho_units(space_);
    const double urho = upsilon / (2.0 * r);
    const Complex iu(0.0, urho);
    const Complex a_p = 0.5 * r * (1.0 + ell - iu);
    const Complex b_p = 0.5 * r * (1.0 + ell + iu);
    const Complex c_p = r * (1.0 + ell) + 0.5;
    const Complex a_m = 0.5 * r * (1.0 - ell - iu);
    const Complex b_m = 0.5 * r * (1.0 - ell + iu);
    const Complex c_m = r * (1.0 - ell) + 0.5;
    auto integrand = [&](double th) {
        const double s2 = std::sin(th) * std::sin(th);
        return gauss_2f1(a_p, b_p, c_p, s2) * gauss_2f1(a_m, b_m, c_m, s2) *
               cross_section_.weight(th);
    };
    auto h = integrate_adaptive(integrand, 0.0, 0.5 * kPi, 1e-12, 800);
    return gammas * h.value;
}

Complex BochnerDensity::value_damped(double upsilon, double damp) const {
    return normalization_ * value_damped_unnorm(upsilon, damp);
}

std::vector<double> BochnerDensity::sample(
    const std::vector<double>& grid) const {
    std::vector<double> out(grid.size());
    parallel_for_index(grid.size(),
                       [&](std::size_t i) { out[i] = (*this)(grid[i]); });
    return out;
}

std::vector<double> BochnerDensity::sample_serial(
    const std::vector<double>& grid) const {
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) out[i] = (*this)(grid[i]);
    return out;
}

double BochnerDensity::truncation(double tol, double im_t) const {
    const double margin = kPi - std::abs(im_t);
    if (margin <= 0.0)
        throw DomainError(ErrorCode::OutsideTube, "|Im t| >= pi");
    // Stirling envelope: |m| <= C u^{2(2r-1)} e^{-pi u}; solve for the tail
    // mass below tol with damping e^{|Im t| u}.
    const double base = std::max(40.0, (-std::log(tol) + 12.0) / margin);
    const double poly = std::max(0.0, 2.0 * (2.0 * space_.r() - 1.0));
    return base * (1.0 + 0.15 * poly) + std::abs(ell_gd_.real());
}

BochnerDensity bochner_density(const RankOneSpace& space,
                               const SpectralParam& lambda) {
    return BochnerDensity(space, lambda, CrossSection::default_for(space));
}

BochnerDensity bochner_density(const RankOneSpace& space,
                               const SpectralParam& lambda,
                               const CrossSection& cs) {
    return BochnerDensity(space, lambda, cs);
}

BochnerFactorization bochner_factorization(const BochnerDensity& density,
                                           double upsilon) {
    const RankOneSpace& sp = density.space();
    const double r = sp.r();
    const Complex ell = density.lambda().rho_units(sp);
    const double urho = upsilon / (2.0 * r);
    const Complex iu(0.0, urho);
    auto ups = [&](Complex l) {
        return std::exp(ln_gamma(r * (1.0 + l - iu)) +
                        ln_gamma(r * (1.0 + l + iu)) -
                        ln_gamma(r * (2.0 + 2.0 * l)));
    };
    BochnerFactorization f;
    f.upsilon_plus = ups(ell);
    f.upsilon_minus = ups(-ell);
    f.h = density.value(upsilon) / (f.upsilon_plus * f.upsilon_minus);
    return f;
}

LinearFit linear_least_squares(const std::vector<double>& x,
                               const std::vector<double>& y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0, ss_tot = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double resid = y[i] - (fit.intercept + fit.slope * x[i]);
        ss_res += resid * resid;
        ss_tot += (y[i] - my) * (y[i] - my);
        fit.max_residual = std::max(fit.max_residual, std::abs(resid));
    }
    fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

DecayFit fit_decay_rate(const BochnerDensity& density, double upsilon_lo,
                        double upsilon_hi, int points) {
    if (!(upsilon_hi > upsilon_lo) || upsilon_lo < 10.0 ||
        upsilon_hi - upsilon_lo < 5.0)
        throw DomainError(ErrorCode::InsufficientDecade,
                          "need upsilon_hi > upsilon_lo >= 10 spanning >= 5");
    const double r = density.space().r();
    const double lam = density.lambda()
                           .geodesic_dual(density.space())
                           .real();
    std::vector<double> xs(points), ys(points);
    for (int i = 0; i < points; ++i)
        xs[i] = upsilon_lo +
                (upsilon_hi - upsilon_lo) * double(i) / double(points - 1);
    std::vector<double> mv(points);
    parallel_for_index(static_cast<std::size_t>(points), [&](std::size_t i) {
        mv[i] = density(xs[i]);
    });
    for (int i = 0; i < points; ++i) {
        const double u = xs[i];
        // remove the |z|^{x-1/2}-type polynomial factor of the Stirling
        // envelope so the residual slope is the pure exponential rate
        const double env =
            (2.0 * r - 1.0) / 2.0 *
            (std::log(r * r + 0.25 * (u + lam) * (u + lam)) +
             std::log(r * r + 0.25 * (u - lam) * (u - lam)));
        ys[i] = std::log(mv[i]) - env;
    }
    LinearFit fit = linear_least_squares(xs, ys);
    return DecayFit{-fit.slope, fit.r_squared};
}

PositivityResult positivity_check(const RankOneSpace& space,
                                  const SpectralParam& lambda,
                                  const std::vector<double>& upsilon_grid,
                                  double tol) {
    const Complex ell = lambda.rho_units(space);
    const bool imag_case = std::abs(ell.real()) <= 1e-12;
    const bool real_case = std::abs(ell.imag()) <= 1e-12;

    if (real_case && std::abs(std::abs(ell.real()) - 1.0) <= 1e-12)
        return PositivityResult{PositivityStatus::DiracDegenerate, 0.0};
    if (real_case && std::abs(ell.real()) > 1.0)
        throw DomainError(ErrorCode::OutOfRange,
                          "real lambda must satisfy |lambda| <= 1 rho");

    auto density = bochner_density(space, lambda);
    double mn = 0.0;
    std::vector<double> vals = density.sample(upsilon_grid);
    for (double v : vals) mn = std::min(mn, v);

    if (!imag_case && !real_case)
        return PositivityResult{PositivityStatus::Unconstrained, mn};
    return PositivityResult{mn >= -tol ? PositivityStatus::GridNonNegative
                                       : PositivityStatus::SignIndefinite,
                            mn};
}

} // namespace zsf
