#include "zsf/rankone.hpp"

#include <cmath>

#include "zsf/errors.hpp"
#include "zsf/quadrature.hpp"

namespace zsf {

double xi_minus_rho(const RankOneSpace& space, const VPoint& v) {
    if (v.x_norm == 0.0 && v.y_norm == 0.0)
        throw DomainError(ErrorCode::DegeneratePoint,
                          "xi_minus_rho undefined at the identity");
    const double c = space.helgason_c();
    const double x2 = v.x_norm * v.x_norm;
    const double base = c * c * x2 * x2 + 4.0 * c * v.y_norm * v.y_norm;
    return std::pow(base, -(space.p + 2.0 * space.q) / 4.0);
}

double exp_rho_h(const RankOneSpace& space, const VPoint& v) {
    const double c = space.helgason_c();
    const double u = 1.0 + c * v.x_norm * v.x_norm;
    const double base = u * u + 4.0 * c * v.y_norm * v.y_norm;
    return std::pow(base, (space.p + 2.0 * space.q) / 4.0);
}

IwasawaFactors iwasawa_decompose(const Mat2& g) {
    const double det =
        g[0][0] * g[1][1] - g[0][1] * g[1][0];
    if (std::abs(det - 1.0) > 1e-12)
        throw DomainError(ErrorCode::NotUnimodular, "det(g) != 1");
    const double col = g[0][0] * g[0][0] + g[1][0] * g[1][0];
    IwasawaFactors f;
    f.k_angle = std::atan2(g[1][0], g[0][0]);
    f.t = std::log(col);
    f.n_entry = (g[0][0] * g[0][1] + g[1][0] * g[1][1]) / col;
    return f;
}

Mat2 compose_iwasawa(const IwasawaFactors& f) {
    const double c = std::cos(f.k_angle), s = std::sin(f.k_angle);
    const double eh = std::exp(0.5 * f.t), el = std::exp(-0.5 * f.t);
    // k(angle) * diag(e^{t/2}, e^{-t/2}) * [[1, x],[0, 1]]
    Mat2 g;
    g[0][0] = c * eh;
    g[0][1] = c * eh * f.n_entry - s * el;
    g[1][0] = s * eh;
    g[1][1] = s * eh * f.n_entry + c * el;
    return g;
}

Mat2 sl2_vpoint_matrix(double x) {
    return Mat2{{{1.0, 0.0}, {x / 2.0, 1.0}}};
}

namespace {

void require_no_double_root(const RankOneSpace& space) {
    if (space.q != 0)
        throw DomainError(ErrorCode::UnsupportedSpace,
                          "K-integral oracle needs q = 0");
}

double sphere_weight_mass(int p, double abs_tol) {
    auto res = integrate_adaptive_real(
        [p](double th) { return std::pow(std::sin(th), p - 1); }, 0.0, kPi,
        abs_tol);
    return res.value.real();
}

} // namespace

OracleValue spherical_oracle(const RankOneSpace& space,
                             const SpectralParam& lambda, double t,
                             double abs_tol) {
    require_no_double_root(space);
    if (t < 0.0)
        throw DomainError(ErrorCode::InvalidArgument, "t must be >= 0");
    const Complex ell = lambda.geodesic_dual(space);
    const Complex expo = Complex(0.0, 1.0) * ell - 0.5 * space.p;
    const double ch = std::cosh(t), sh = std::sinh(t);
    const int p = space.p;
    auto integrand = [&](double th) {
        const double base = ch - sh * std::cos(th);
        return std::exp(expo * std::log(base)) *
               std::pow(std::sin(th), p - 1);
    };
    auto num = integrate_adaptive(integrand, 0.0, kPi, abs_tol);
    const double mass = sphere_weight_mass(p, 1e-13);
    if (num.abs_err > 1e3 * abs_tol + 1e-8)
        throw NumericError(ErrorCode::QuadratureFailure,
                           "oracle quadrature did not converge");
    return OracleValue{num.value / mass, num.abs_err / mass + 1e-14};
}

OracleValue spherical_oracle_iwasawa(const RankOneSpace& space,
                                     const SpectralParam& lambda, double t,
                                     double abs_tol) {
    if (!(space == RankOneSpace::sl2r()))
        throw DomainError(ErrorCode::UnsupportedSpace,
                          "matrix route is SL(2,R) only");
    const Complex ell = lambda.geodesic_dual(space);
    const Complex expo = Complex(0.0, 1.0) * ell - 0.5;
    const double eh = std::exp(0.5 * t), el = std::exp(-0.5 * t);
    auto integrand = [&](double th) {
        const double c = std::cos(th), s = std::sin(th);
        const Mat2 g{{{eh * c, -eh * s}, {el * s, el * c}}};
        const IwasawaFactors f = iwasawa_decompose(g);
        return std::exp(expo * f.t);
    };
    auto res = integrate_adaptive(integrand, 0.0, 2.0 * kPi, abs_tol);
    return OracleValue{res.value / (2.0 * kPi),
                       res.abs_err / (2.0 * kPi) + 1e-14};
}

AdaptedVector k_fixed_adapted_vector(const RankOneSpace& space,
                                     const SpectralParam& lambda) {
    if (!(space == RankOneSpace::sl2r()))
        throw DomainError(ErrorCode::UnsupportedSpace,
                          "adapted model implemented for SL(2,R)");
    const Complex ell = lambda.rho_units(space);
    AdaptedVector f;
    f.lambda = lambda;
    f.s_halfwidth = 40.0 / std::max(1e-2, 1.0 - std::abs(ell.real()));
    // on the orbit x = omega*2*e^{-s}:  e^{-s/2} (1 + e^{-2s})^{-(1+ell)/2}
    f.eval = [ell](int, double s) {
        return std::exp(-0.5 * s - 0.5 * (1.0 + ell) * log1p_exp(-2.0 * s));
    };
    return f;
}

Complex k_fixed_vprime(const RankOneSpace& space, const SpectralParam& lambda,
                       double x) {
    if (!(space == RankOneSpace::sl2r()))
        throw DomainError(ErrorCode::UnsupportedSpace,
                          "adapted model implemented for SL(2,R)");
    if (x == 0.0)
        throw DomainError(ErrorCode::DegeneratePoint, "x = 0 not in V'");
    const Complex ell = lambda.rho_units(space);
    return std::sqrt(std::abs(x) / 2.0) *
           std::exp(-0.5 * (1.0 + ell) * std::log1p(x * x / 4.0));
}

const char* spectral_units_name(SpectralUnits u) {
    switch (u) {
        case SpectralUnits::RhoUnits: return "rho";
        case SpectralUnits::AlphaUnits: return "alpha";
        case SpectralUnits::GeodesicDual: return "geodesic";
    }
    return "?";
}

std::string SpectralParam::describe(const RankOneSpace& s) const {
    const Complex gd = geodesic_dual(s);
    char buf[96];
    std::snprintf(buf, sizeof(buf), "lambda_gd=(%g,%g)", gd.real(), gd.imag());
    return buf;
}

} // namespace zsf
