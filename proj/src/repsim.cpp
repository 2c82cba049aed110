#include "zsf/repsim.hpp"

#include <cmath>

#include "zsf/bochner.hpp"
#include "zsf/errors.hpp"
#include "zsf/parallel.hpp"
#include "zsf/quadrature.hpp"

namespace zsf {

namespace {

void require_sl2(const RankOneSpace& space) {
    if (!(space == RankOneSpace::sl2r()))
        throw DomainError(ErrorCode::UnsupportedSpace,
                          "adapted model implemented for SL(2,R)");
}

void require_contragredient_pair(const RankOneSpace& space,
                                 const AdaptedVector& f,
                                 const AdaptedVector& g) {
    const Complex want = f.lambda.contragredient(space).geodesic_dual(space);
    const Complex have = g.lambda.geodesic_dual(space);
    if (std::abs(want - have) > 1e-10)
        throw DomainError(ErrorCode::RealizationMismatch,
                          "g must carry the contragredient parameter");
}

// uniform twisted samples G(s) = chi_lambda(a_s)^{-1} f(omega, s) on
// [-S, S]; one array per orbit, reused by every Filon transform
struct TwistedSamples {
    double s0, h;
    std::vector<Complex> orbit_plus, orbit_minus;
};

TwistedSamples sample_twisted(const RankOneSpace& space,
                              const AdaptedVector& f, double h) {
    const double S = f.s_halfwidth;
    int half = static_cast<int>(std::ceil(S / h));
    const std::size_t n = 2 * static_cast<std::size_t>(half) + 1;
    TwistedSamples out;
    out.s0 = -h * half;
    out.h = h;
    out.orbit_plus.resize(n);
    out.orbit_minus.resize(n);
    const Complex ell = f.lambda.geodesic_dual(space);
    parallel_for_index(n, [&](std::size_t j) {
        const double s = out.s0 + h * double(j);
        const Complex twist = std::exp(Complex(0.0, -1.0) * ell * s);
        out.orbit_plus[j] = twist * f.eval(+1, s);
        out.orbit_minus[j] = twist * f.eval(-1, s);
    });
    return out;
}

double sample_step(const AdaptedVector& f) {
    // set by the smoothness scale of the profile, not by the oscillation
    // (Filon integrates e^{-ius} exactly)
    return f.s_halfwidth <= 8.0 ? 0.0125 : 0.025;
}

} // namespace

Complex adapted_character(const RankOneSpace& space,
                          const SpectralParam& lambda, double s) {
    const Complex ell = lambda.geodesic_dual(space);
    return std::exp(Complex(0.0, 1.0) * ell * s);
}

AdaptedVector adapted_action(const RankOneSpace& space,
                             const SpectralParam& lambda, double a_s,
                             const AdaptedVector& f) {
    require_sl2(space);
    if (std::abs(lambda.geodesic_dual(space) -
                 f.lambda.geodesic_dual(space)) > 1e-12)
        throw DomainError(ErrorCode::RealizationMismatch,
                          "vector lives in a different lambda-realization");
    AdaptedVector out;
    out.lambda = f.lambda;
    out.s_halfwidth = f.s_halfwidth + std::abs(a_s);
    const Complex chi = adapted_character(space, lambda, a_s);
    auto inner = f.eval;
    out.eval = [chi, a_s, inner](int omega, double s) {
        return chi * inner(omega, s - a_s);
    };
    return out;
}

double orbit_norm_sq(const RankOneSpace& space, const AdaptedVector& f) {
    require_sl2(space);
    const double re_ell = f.lambda.rho_units(space).real();
    const double S = f.s_halfwidth;
    double total = 0.0;
    for (int omega : {+1, -1}) {
        auto res = integrate_adaptive_real(
            [&](double s) {
                // weight and |f|^2 can over/underflow separately; combine
                // their logs
                const double n2 = std::norm(f.eval(omega, s));
                if (n2 == 0.0) return 0.0;
                return std::exp(std::log(n2) +
                                re_ell * log1p_exp(-2.0 * s));
            },
            -S, S, 1e-12, 6000);
        total += res.value.real();
    }
    return total;
}

Complex adapted_pairing(const RankOneSpace& space, const AdaptedVector& f,
                        const AdaptedVector& g) {
    require_sl2(space);
    const double S = std::max(f.s_halfwidth, g.s_halfwidth);
    Complex total{0.0, 0.0};
    for (int omega : {+1, -1}) {
        auto res = integrate_adaptive(
            [&](double u) {
                return f.eval(omega, u) * std::conj(g.eval(omega, u));
            },
            -S, S, 1e-12, 6000);
        total += res.value;
    }
    return total;
}

MatrixCoefficient matrix_coefficient_direct(
    const RankOneSpace& space, const AdaptedVector& f, const AdaptedVector& g,
    const std::vector<double>& s_grid) {
    require_sl2(space);
    require_contragredient_pair(space, f, g);
    double s_max = 0.0;
    for (double s : s_grid) s_max = std::max(s_max, std::abs(s));
    const double S = std::max(f.s_halfwidth + s_max, g.s_halfwidth);

    // integrability probe for the pair: the product must decay toward both
    // window ends
    for (int omega : {+1, -1}) {
        const double far = std::abs(f.eval(omega, -S) *
                                    std::conj(g.eval(omega, -S))) +
                           std::abs(f.eval(omega, S) *
                                    std::conj(g.eval(omega, S)));
        const double mid = std::abs(f.eval(omega, 0.0)) *
                           std::abs(g.eval(omega, 0.0));
        if (!(far <= 1e-6 * (mid + 1.0)))
            throw NumericError(ErrorCode::NonIntegrablePair,
                               "pair profile does not decay on the orbit");
    }

    MatrixCoefficient out;
    out.s_grid = s_grid;
    out.lambda = f.lambda;
    out.values.resize(s_grid.size());
    parallel_for_index(s_grid.size(), [&](std::size_t i) {
        const double s = s_grid[i];
        const Complex chi = adapted_character(space, f.lambda, s);
        Complex sum{0.0, 0.0};
        for (int omega : {+1, -1}) {
            auto res = integrate_adaptive(
                [&](double u) {
                    return f.eval(omega, u - s) * std::conj(g.eval(omega, u));
                },
                -S, S, 1e-12, 8000);
            sum += res.value;
        }
        out.values[i] = chi * sum;
    });
    return out;
}

Complex adapted_transform(const RankOneSpace& space, const AdaptedVector& f,
                          double upsilon, int omega) {
    require_sl2(space);
    const TwistedSamples ts = sample_twisted(space, f, sample_step(f));
    const auto& arr = omega > 0 ? ts.orbit_plus : ts.orbit_minus;
    return filon_integral(arr, ts.s0, ts.h, upsilon);
}

namespace {

std::vector<Complex> density_on_grid(const RankOneSpace& space,
                                     const AdaptedVector& f,
                                     const AdaptedVector& g,
                                     const std::vector<double>& u_grid) {
    require_contragredient_pair(space, f, g);
    const TwistedSamples fs = sample_twisted(space, f, sample_step(f));
    const TwistedSamples gs = sample_twisted(space, g, sample_step(g));
    std::vector<Complex> out(u_grid.size());
    parallel_for_index(u_grid.size(), [&](std::size_t i) {
        const double u = u_grid[i];
        const Complex fp = filon_integral(fs.orbit_plus, fs.s0, fs.h, u);
        const Complex fm = filon_integral(fs.orbit_minus, fs.s0, fs.h, u);
        const Complex gp = filon_integral(gs.orbit_plus, gs.s0, gs.h, u);
        const Complex gm = filon_integral(gs.orbit_minus, gs.s0, gs.h, u);
        out[i] = (fp * std::conj(gp) + fm * std::conj(gm)) / (2.0 * kPi);
    });
    return out;
}

} // namespace

std::vector<Complex> bochner_from_vectors(const RankOneSpace& space,
                                          const AdaptedVector& f,
                                          const AdaptedVector& g,
                                          const std::vector<double>& u_grid) {
    require_sl2(space);
    return density_on_grid(space, f, g, u_grid);
}

Complex bochner_from_vectors_at(const RankOneSpace& space,
                                const AdaptedVector& f,
                                const AdaptedVector& g, double upsilon) {
    require_sl2(space);
    return density_on_grid(space, f, g, {upsilon})[0];
}

Complex coefficient_via_bochner(const RankOneSpace& space,
                                const AdaptedVector& f,
                                const AdaptedVector& g, double s,
                                double abs_tol) {
    require_sl2(space);
    // uniform m-grid wide enough that the tail is invisible, then one Filon
    // pass for the e^{-ius} integral
    const double h = 0.025;
    double U = 48.0;
    std::vector<double> grid;
    std::vector<Complex> m;
    for (;;) {
        grid.clear();
        const int half = static_cast<int>(std::round(U / h));
        for (int i = -half; i <= half; ++i) grid.push_back(h * i);
        m = density_on_grid(space, f, g, grid);
        double edge = 0.0;
        for (std::size_t i = 0; i + 1 < 80 && i < m.size(); ++i) {
            edge = std::max(edge, std::abs(m[i]));
            edge = std::max(edge, std::abs(m[m.size() - 1 - i]));
        }
        if (edge < abs_tol / (4.0 * U) || U >= 192.0) break;
        U += 48.0;
    }
    return filon_integral(m, grid.front(), h, s);
}

double theorem_41_check(const RankOneSpace& space, const AdaptedVector& f,
                        const AdaptedVector& g,
                        const std::vector<double>& s_samples) {
    require_sl2(space);
    if (!f.lambda.is_unitary(space))
        throw DomainError(ErrorCode::OutOfStrip,
                          "theorem check needs unitary lambda");
    MatrixCoefficient direct =
        matrix_coefficient_direct(space, f, g, s_samples);

    // shared m-grid for all samples
    const double h = 0.025;
    const double U = 64.0;
    std::vector<double> grid;
    const int half = static_cast<int>(std::round(U / h));
    for (int i = -half; i <= half; ++i) grid.push_back(h * i);
    std::vector<Complex> m = density_on_grid(space, f, g, grid);

    double worst = 0.0;
    for (std::size_t i = 0; i < s_samples.size(); ++i) {
        const Complex fourier =
            filon_integral(m, grid.front(), h, s_samples[i]);
        worst = std::max(worst, std::abs(fourier - direct.values[i]));
    }
    return worst;
}

Theorem51Result theorem_51_check(const RankOneSpace& space,
                                 const SpectralParam& lambda,
                                 const std::vector<double>& s_samples) {
    require_sl2(space);
    if (!lambda.in_strip(space))
        throw DomainError(ErrorCode::OutOfStrip, "lambda outside the strip");
    const Complex ell = lambda.rho_units(space);
    if (ell.real() < 0.0)
        throw DomainError(ErrorCode::OutOfStrip,
                          "use Re(lambda) >= 0 (Weyl symmetry covers < 0)");

    AdaptedVector f = k_fixed_adapted_vector(space, lambda);
    AdaptedVector g =
        k_fixed_adapted_vector(space, lambda.contragredient(space));

    // twisted-integrability estimate behind the transform route: both
    // twisted profiles must decay at the window ends
    {
        const Complex lf = f.lambda.geodesic_dual(space);
        const Complex lg = g.lambda.geodesic_dual(space);
        for (double end : {-1.0, 1.0}) {
            const double sf = end * f.s_halfwidth;
            const double sg = end * g.s_halfwidth;
            const double pf = std::abs(
                std::exp(Complex(0.0, -1.0) * lf * sf) * f.eval(+1, sf));
            const double pg = std::abs(
                std::exp(Complex(0.0, -1.0) * lg * sg) * g.eval(+1, sg));
            if (!(pf < 1e-6 && pg < 1e-6))
                throw NumericError(ErrorCode::ParsevalHypothesisFailed,
                                   "twisted profile not integrable");
        }
    }

    MatrixCoefficient direct =
        matrix_coefficient_direct(space, f, g, s_samples);

    const double h = 0.025;
    const double U = 24.0;
    std::vector<double> grid;
    const int half = static_cast<int>(std::round(U / h));
    for (int i = -half; i <= half; ++i) grid.push_back(h * i);
    std::vector<Complex> m = density_on_grid(space, f, g, grid);

    Theorem51Result out{0.0, 0.0};
    for (std::size_t i = 0; i < s_samples.size(); ++i) {
        const Complex fourier =
            filon_integral(m, grid.front(), h, s_samples[i]);
        out.coefficient_defect = std::max(
            out.coefficient_defect, std::abs(fourier - direct.values[i]));
    }

    // orbit-transform density against the closed Gamma form, both scaled to
    // the value at upsilon = 0
    const double two_r = 2.0 * space.r();
    const std::size_t i0 = static_cast<std::size_t>(half);
    const Complex m0 = m[i0];
    const Complex c0 = f_tilde(space, lambda, 0.0, 0.0) *
                       f_tilde(space, SpectralParam::rho(-ell), 0.0, 0.0);
    for (int k = -40; k <= 40; ++k) {
        const double u = 0.5 * k;
        const std::size_t idx = static_cast<std::size_t>(
            static_cast<long long>(i0) + std::llround(u / h));
        const Complex closed = f_tilde(space, lambda, u / two_r, 0.0) *
                               f_tilde(space, SpectralParam::rho(-ell),
                                       u / two_r, 0.0);
        out.density_defect = std::max(
            out.density_defect, std::abs(m[idx] / m0 - closed / c0));
    }
    return out;
}

AdaptedVector bump_vector(const SpectralParam& lambda, int omega,
                          double center, double width) {
    AdaptedVector v;
    v.lambda = lambda;
    v.s_halfwidth = std::abs(center) + width + 1.0;
    v.eval = [omega, center, width](int w, double s) {
        if (w != omega) return Complex(0.0, 0.0);
        const double u = (s - center) / width;
        if (std::abs(u) >= 1.0) return Complex(0.0, 0.0);
        return Complex(std::exp(-1.0 / (1.0 - u * u)), 0.0);
    };
    return v;
}

} // namespace zsf
