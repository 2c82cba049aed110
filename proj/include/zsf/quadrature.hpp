#ifndef ZSF_QUADRATURE_HPP
#define ZSF_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "zsf/common.hpp"
#include "zsf/errors.hpp"

namespace zsf {

struct QuadResult {
    Complex value{0.0, 0.0};
    double abs_err = 0.0;
    long evaluations = 0;
};

namespace detail {

// 15-point Kronrod / 7-point Gauss pair (QUADPACK dqk15 nodes and weights).
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
void gk15_panel(F&& f, double a, double b, Complex& kronrod, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    Complex fc = f(c);
    Complex resk = kWgk[7] * fc;
    Complex resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double x = h * kXgk[j];
        const Complex f1 = f(c - x);
        const Complex f2 = f(c + x);
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    kronrod = resk * h;
    err = std::abs((resk - resg) * h);
}

struct Segment {
    double a, b, err;
    Complex value;
};

} // namespace detail

// Adaptive Gauss-Kronrod on [a,b] for a complex-valued integrand.
// Bisects the worst segment until the summed error estimate meets abs_tol.
// The interval starts pre-split so features much narrower than the whole
// interval are not missed by the first panel.
template <class F>
QuadResult integrate_adaptive(F&& f, double a, double b, double abs_tol,
                              int max_segments = 4000,
                              int initial_segments = 8) {
    QuadResult res;
    if (a == b) return res;
    std::vector<detail::Segment> segs;
    initial_segments = std::max(1, std::min(initial_segments, max_segments));
    for (int i = 0; i < initial_segments; ++i) {
        detail::Segment s{a + (b - a) * double(i) / initial_segments,
                          a + (b - a) * double(i + 1) / initial_segments, 0.0,
                          Complex{}};
        detail::gk15_panel(f, s.a, s.b, s.value, s.err);
        res.evaluations += 15;
        segs.push_back(s);
    }

    auto total_err = [&] {
        double e = 0.0;
        for (const auto& s : segs) e += s.err;
        return e;
    };

    while (total_err() > abs_tol &&
           static_cast<int>(segs.size()) < max_segments) {
        std::size_t worst = 0;
        for (std::size_t i = 1; i < segs.size(); ++i)
            if (segs[i].err > segs[worst].err) worst = i;
        detail::Segment parent = segs[worst];
        const double mid = 0.5 * (parent.a + parent.b);
        if (mid <= parent.a || mid >= parent.b) break; // interval exhausted
        detail::Segment left{parent.a, mid, 0.0, Complex{}};
        detail::Segment right{mid, parent.b, 0.0, Complex{}};
        detail::gk15_panel(f, left.a, left.b, left.value, left.err);
        detail::gk15_panel(f, right.a, right.b, right.value, right.err);
        res.evaluations += 30;
        segs[worst] = left;
        segs.push_back(right);
    }

    Complex total{0.0, 0.0};
    for (const auto& s : segs) total += s.value;
    res.value = total;
    res.abs_err = total_err();
    return res;
}

template <class F>
QuadResult integrate_adaptive_real(F&& f, double a, double b, double abs_tol,
                                   int max_segments = 4000,
                                   int initial_segments = 8) {
    return integrate_adaptive([&](double x) { return Complex(f(x), 0.0); }, a,
                              b, abs_tol, max_segments, initial_segments);
}

// Single non-adaptive GK15 panel (used for panel-decomposed oscillatory
// integrals where the caller controls the panel width).
template <class F>
QuadResult integrate_panel(F&& f, double a, double b) {
    QuadResult res;
    double err = 0.0;
    detail::gk15_panel(f, a, b, res.value, err);
    res.abs_err = err;
    res.evaluations = 15;
    return res;
}

namespace detail {

struct FilonCoeffs {
    double alpha, beta, gamma;
};

// Filon quadrature coefficients at theta = s*h, with the small-angle series
// to dodge the cancellation in the closed forms.
inline FilonCoeffs filon_coeffs(double theta) {
    FilonCoeffs c;
    const double t = theta;
    if (std::abs(t) < 0.05) {
        const double t2 = t * t;
        c.alpha = t * t2 * (2.0 / 45.0 + t2 * (-2.0 / 315.0 + t2 * (2.0 / 4725.0)));
        c.beta = 2.0 / 3.0 + t2 * (2.0 / 15.0 + t2 * (-4.0 / 105.0 + t2 * (2.0 / 567.0)));
        c.gamma = 4.0 / 3.0 + t2 * (-2.0 / 15.0 + t2 * (1.0 / 210.0 + t2 * (-1.0 / 11340.0)));
        return c;
    }
    const double s = std::sin(t), co = std::cos(t), t3 = t * t * t;
    c.alpha = (t * t + t * s * co - 2.0 * s * s) / t3;
    c.beta = 2.0 * (t * (1.0 + co * co) - 2.0 * s * co) / t3;
    c.gamma = 4.0 * (s - t * co) / t3;
    return c;
}

} // namespace detail

// Filon quadrature of int f(x) e^{-i s x} dx over the uniform grid
// x_j = x0 + j h, j = 0..n-1 (n odd). The oscillation is handled exactly;
// only f is interpolated, so h is set by the smoothness of f alone.
inline Complex filon_integral(const std::vector<Complex>& f, double x0,
                              double h, double s) {
    const std::size_t n = f.size();
    if (n < 3 || n % 2 == 0)
        throw DomainError(ErrorCode::InvalidArgument,
                          "filon grid needs odd point count >= 3");
    const auto c = detail::filon_coeffs(s * h);
    Complex even_c{0, 0}, odd_c{0, 0}, even_s{0, 0}, odd_s{0, 0};
    for (std::size_t j = 0; j < n; ++j) {
        const double x = x0 + h * double(j);
        const double cs = std::cos(s * x), sn = std::sin(s * x);
        if (j % 2 == 0) {
            even_c += f[j] * cs;
            even_s += f[j] * sn;
        } else {
            odd_c += f[j] * cs;
            odd_s += f[j] * sn;
        }
    }
    const double xa = x0, xb = x0 + h * double(n - 1);
    const Complex fa = f.front(), fb = f.back();
    even_c -= 0.5 * (fa * std::cos(s * xa) + fb * std::cos(s * xb));
    even_s -= 0.5 * (fa * std::sin(s * xa) + fb * std::sin(s * xb));
    const Complex cos_int =
        h * (c.alpha * (fb * std::sin(s * xb) - fa * std::sin(s * xa)) +
             c.beta * even_c + c.gamma * odd_c);
    const Complex sin_int =
        h * (c.alpha * (fa * std::cos(s * xa) - fb * std::cos(s * xb)) +
             c.beta * even_s + c.gamma * odd_s);
    return cos_int - Complex(0.0, 1.0) * sin_int;
}

} // namespace zsf

#endif
