#include "zsf/transforms.hpp"

#include <cmath>

#include "zsf/bochner.hpp"
#include "zsf/errors.hpp"
#include "zsf/parallel.hpp"
#include "zsf/quadrature.hpp"
#include "zsf/rankone.hpp"
#include "zsf/specfun.hpp"

namespace zsf {

namespace {

const RankOneSpace kSl2 = RankOneSpace::sl2r();

double phi_oracle_real(double lambda, double t) {
    return spherical_oracle(kSl2, SpectralParam::geodesic(Complex(lambda)), t)
        .value.real();
}

// composite Simpson on a uniform grid (odd point count)
template <class F>
double simpson(const std::vector<double>& grid, F&& values) {
    const std::size_t n = grid.size();
    if (n < 3 || n % 2 == 0)
        throw DomainError(ErrorCode::InvalidArgument,
                          "Simpson grid needs odd point count >= 3");
    const double h = grid[1] - grid[0];
    double sum = values(0) + values(n - 1);
    for (std::size_t i = 1; i + 1 < n; ++i)
        sum += values(i) * (i % 2 == 1 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

} // namespace

double RadialFunction::effective_support(double tol) const {
    if (decay_class == DecayClass::Compact && support_bound < 1e299)
        return support_bound;
    double scale = std::abs(profile(0.0));
    for (double t = 0.25; t <= 64.0; t += 0.25)
        scale = std::max(scale, std::abs(profile(t)));
    double run = 0.0;
    for (double t = 0.25; t <= 64.0; t += 0.25) {
        if (std::abs(profile(t)) < tol * scale) {
            run += 0.25;
            if (run >= 2.0) return t;
        } else {
            run = 0.0;
        }
    }
    throw NumericError(ErrorCode::TailTruncation,
                       "profile does not decay below tolerance by t = 64");
}

RadialFunction truncated_gaussian(double sigma) {
    if (!(sigma > 0.0))
        throw DomainError(ErrorCode::InvalidArgument, "sigma must be > 0");
    const double cut = 6.0 * sigma;
    const double ramp = 0.5;
    RadialFunction f;
    f.support_bound = cut;
    f.decay_class = DecayClass::Compact;
    f.profile = [sigma, cut, ramp](double t) {
        const double a = std::abs(t);
        if (a >= cut) return 0.0;
        const double g = std::exp(-0.5 * (a / sigma) * (a / sigma));
        if (a <= cut - ramp) return g;
        const double u = (a - (cut - ramp)) / ramp; // in (0,1)
        const double s = u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
        return g * (1.0 - s);
    };
    return f;
}

Complex c_function(double lambda) {
    if (lambda == 0.0)
        throw DomainError(ErrorCode::SpectralPole, "c-function pole at 0");
    const double kappa = 2.0 * std::sqrt(kPi);
    const Complex il(0.0, lambda);
    return kappa * std::exp(ln_gamma(il) - ln_gamma(0.5 + il));
}

double plancherel_density(double lambda) {
    if (lambda == 0.0) return 0.0;
    const Complex c = c_function(lambda);
    return 1.0 / std::norm(c);
}

SpectralProfile spherical_transform(const RadialFunction& f,
                                    const std::vector<double>& lambda_grid) {
    const double R = f.effective_support();
    SpectralProfile out;
    out.grid = lambda_grid;
    out.values.resize(lambda_grid.size());
    parallel_for_index(lambda_grid.size(), [&](std::size_t i) {
        const double lam = lambda_grid[i];
        auto res = integrate_adaptive_real(
            [&](double t) {
                return f.profile(t) * phi_oracle_real(lam, t) *
                       kRadialJacobian * std::sinh(t);
            },
            0.0, R, 1e-10, 2000);
        out.values[i] = res.value;
    });
    return out;
}

std::vector<double> inverse_spherical(const SpectralProfile& profile,
                                      const std::vector<double>& t_grid,
                                      double support_hint) {
    if (!profile.even)
        throw DomainError(ErrorCode::InvalidArgument,
                          "inversion requires an even profile");
    const std::size_t n = profile.grid.size();
    if (n < 3 || n % 2 == 0 ||
        std::abs(profile.grid.front() + profile.grid.back()) > 1e-9)
        throw DomainError(ErrorCode::InvalidArgument,
                          "need a symmetric uniform grid, odd point count");
    const double step = profile.grid[1] - profile.grid[0];
    double t_max = 0.0;
    for (double t : t_grid) t_max = std::max(t_max, std::abs(t));
    if (step > kPi / (4.0 * (support_hint + t_max + 1.0)))
        throw DomainError(ErrorCode::GridTooCoarse,
                          "lambda step too large for the support bound");

    std::vector<double> pl(n);
    for (std::size_t j = 0; j < n; ++j)
        pl[j] = plancherel_density(profile.grid[j]);

    std::vector<double> out(t_grid.size());
    parallel_for_index(t_grid.size(), [&](std::size_t i) {
        const double t = t_grid[i];
        std::vector<double> phis(n);
        // phi is even in lambda: evaluate the non-negative half and mirror
        for (std::size_t j = (n - 1) / 2; j < n; ++j) {
            phis[j] = phi_oracle_real(profile.grid[j], t);
            phis[n - 1 - j] = phis[j];
        }
        out[i] = simpson(profile.grid, [&](std::size_t j) {
            return profile.values[j].real() * phis[j] * pl[j];
        });
    });
    return out;
}

double abel_transform_at(const RadialFunction& f, double t) {
    const double R = f.effective_support();
    const double ch = std::cosh(t);
    if (std::cosh(R) <= ch) return 0.0;
    const double x_max = std::sqrt(2.0 * std::exp(-t) * (std::cosh(R) - ch));
    auto res = integrate_adaptive_real(
        [&](double x) {
            const double arg = ch + std::exp(t) * x * x / 2.0;
            return f.profile(std::acosh(arg));
        },
        0.0, x_max, 1e-12, 2000);
    return std::exp(t / 2.0) * 2.0 * res.value.real();
}

std::vector<double> abel_transform(const RadialFunction& f,
                                   const std::vector<double>& t_grid) {
    std::vector<double> out(t_grid.size());
    parallel_for_index(t_grid.size(), [&](std::size_t i) {
        out[i] = abel_transform_at(f, t_grid[i]);
    });
    return out;
}

double abel_fourier_identity(const RadialFunction& f,
                             const std::vector<double>& lambda_grid) {
    const double R = f.effective_support();
    SpectralProfile side_a = spherical_transform(f, lambda_grid);
    double scale = 0.0;
    for (const auto& v : side_a.values) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return 0.0;
    double worst = 0.0;
    std::vector<double> defects(lambda_grid.size());
    parallel_for_index(lambda_grid.size(), [&](std::size_t i) {
        const double lam = lambda_grid[i];
        auto res = integrate_adaptive(
            [&](double t) {
                return abel_transform_at(f, t) *
                       std::exp(Complex(0.0, -lam * t));
            },
            -R, R, 1e-10, 4000);
        defects[i] = std::abs(res.value - side_a.values[i]);
    });
    for (double d : defects) worst = std::max(worst, d);
    return worst / scale;
}

std::vector<double> spectral_ff(const SpectralProfile& profile,
                                const std::vector<double>& upsilon_grid) {
    const std::size_t n = profile.grid.size();
    if (n < 3 || n % 2 == 0)
        throw DomainError(ErrorCode::InvalidArgument,
                          "need an odd-point profile grid");
    double peak = 0.0;
    for (const auto& v : profile.values) peak = std::max(peak, std::abs(v));
    if (std::abs(profile.values.front()) > 1e-8 * peak ||
        std::abs(profile.values.back()) > 1e-8 * peak)
        throw NumericError(ErrorCode::InsufficientDecay,
                           "profile has not decayed at the grid ends");

    // densities along the lambda grid (m is even in lambda)
    std::vector<double> pl(n);
    for (std::size_t j = 0; j < n; ++j)
        pl[j] = plancherel_density(profile.grid[j]);
    std::vector<const BochnerDensity*> dens(n, nullptr);
    std::vector<BochnerDensity> storage;
    storage.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        storage.emplace_back(
            kSl2, SpectralParam::geodesic(Complex(std::abs(profile.grid[j]))),
            CrossSection::default_for(kSl2));
        dens[j] = &storage.back();
    }

    std::vector<double> out(upsilon_grid.size());
    parallel_for_index(upsilon_grid.size(), [&](std::size_t i) {
        const double u = upsilon_grid[i];
        out[i] = simpson(profile.grid, [&](std::size_t j) {
            return profile.values[j].real() * (*dens[j])(u) * pl[j];
        });
    });
    return out;
}

double spectral_roundtrip(const RadialFunction& f,
                          const SpectralRoundtripOptions& opt) {
    const std::vector<double> lgrid = symmetric_grid(opt.lambda_max,
                                                     opt.lambda_step);
    SpectralProfile prof = spherical_transform(f, lgrid);

    std::vector<double> ugrid;
    for (double u = 0.0; u <= opt.upsilon_max + 1e-12; u += opt.upsilon_step)
        ugrid.push_back(u);
    if (ugrid.size() % 2 == 0) ugrid.push_back(ugrid.back() + opt.upsilon_step);
    std::vector<double> fs = spectral_ff(prof, ugrid);

    const double R = f.effective_support();
    const double t_hi = std::min(R, 6.0);
    std::vector<double> ts = linspace(0.0, t_hi, opt.t_points);

    double sup_f = 0.0;
    for (double t : ts) sup_f = std::max(sup_f, std::abs(f.profile(t)));

    double worst = 0.0;
    for (double t : ts) {
        // f(t) = int_R e^{-i u t} F^s(u) du = 2 int_0^inf cos(u t) F^s du
        double rec = 2.0 * simpson(ugrid, [&](std::size_t j) {
            return std::cos(ugrid[j] * t) * fs[j];
        });
        worst = std::max(worst, std::abs(rec - f.profile(t)));
    }
    return worst / sup_f;
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = a + (b - a) * double(i) / double(n - 1);
    return v;
}

std::vector<double> symmetric_grid(double L, double step) {
    const int half = static_cast<int>(std::round(L / step));
    std::vector<double> v;
    v.reserve(2 * half + 1);
    for (int i = -half; i <= half; ++i) v.push_back(step * i);
    return v;
}

} // namespace zsf
