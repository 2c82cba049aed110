#ifndef ZSF_TRANSFORMS_HPP
#define ZSF_TRANSFORMS_HPP

#include <functional>
#include <vector>

#include "zsf/common.hpp"
#include "zsf/space.hpp"

namespace zsf {

// Radial (bi-K-invariant) function on SL(2,R)/SO(2), given by its profile in
// the geodesic coordinate t >= 0.
enum class DecayClass { Compact, SchwartzLike };

struct RadialFunction {
    std::function<double(double)> profile;
    double support_bound = 1e300; // finite iff compactly supported
    DecayClass decay_class = DecayClass::Compact;

    // Radius beyond which |profile| < tol; throws TailTruncation when the
    // profile does not decay within the scan limit.
    double effective_support(double tol = 1e-14) const;
};

// Gaussian e^{-t^2/(2 sigma^2)} cut at 6 sigma with a C^2 taper over the
// final 0.5 units, so the function is both compactly supported and smooth to
// working accuracy.
RadialFunction truncated_gaussian(double sigma);

// Haar-measure normalization pinned once: radial measure 2 pi sinh(t) dt
// makes the spherical transform match the Euclidean Fourier transform of the
// Abel transform with no extra constant (the calibration identity below).
inline constexpr double kRadialJacobian = 2.0 * kPi;

// c(lambda) = kappa Gamma(i lambda)/Gamma(1/2 + i lambda) with kappa =
// sqrt(2 * kRadialJacobian) = 2 sqrt(pi): the constant for which the
// inversion formula holds verbatim against the measure above. (The leading
// coefficient of the large-t expansion is the same Gamma quotient scaled by
// 1/kRadialJacobian; see hc_leading_coefficient.)
Complex c_function(double lambda);
double plancherel_density(double lambda); // |c|^{-2}; 0 at lambda = 0

// Spherical transform sampled on a lambda grid:
//   f~(lambda) = int_0^inf f(t) phi_lambda(t) * kRadialJacobian sinh(t) dt.
struct SpectralProfile {
    std::vector<double> grid;
    std::vector<Complex> values;
    bool even = true;
};

SpectralProfile spherical_transform(const RadialFunction& f,
                                    const std::vector<double>& lambda_grid);

// Inversion f(t) = int f~(lambda) phi_lambda(t) d lambda / |c(lambda)|^2 on
// a symmetric uniform grid (composite Simpson). Throws GridTooCoarse when
// the grid cannot resolve the oscillation set by the support bound.
std::vector<double> inverse_spherical(const SpectralProfile& profile,
                                      const std::vector<double>& t_grid,
                                      double support_hint);

// Abel transform F_f(t) = e^{t/2} int_R f(d(t,x)) dx with
// cosh d(t,x) = cosh t + e^t x^2 / 2 (radial coordinate of a_t n_x).
std::vector<double> abel_transform(const RadialFunction& f,
                                   const std::vector<double>& t_grid);
double abel_transform_at(const RadialFunction& f, double t);

// Max relative defect of  f~(lambda) = (F_f)^(lambda)  over the grid.
double abel_fourier_identity(const RadialFunction& f,
                             const std::vector<double>& lambda_grid);

// Spectral-side transform F^s(u) = int f~(lambda) m(lambda, u)
// d lambda / |c(lambda)|^2 over the profile's own grid.
std::vector<double> spectral_ff(const SpectralProfile& profile,
                                const std::vector<double>& upsilon_grid);

// Round trip: inverse Fourier transform of F^s compared against f on a
// t-grid; returns the sup-norm relative defect.
struct SpectralRoundtripOptions {
    double lambda_max = 16.0;
    double lambda_step = 0.04;
    double upsilon_max = 18.0;
    double upsilon_step = 0.02;
    int t_points = 25;
};
double spectral_roundtrip(const RadialFunction& f,
                          const SpectralRoundtripOptions& opt = {});

std::vector<double> linspace(double a, double b, int n);

// Uniform symmetric grid [-L, L] with odd point count (Simpson-ready).
std::vector<double> symmetric_grid(double L, double step);

} // namespace zsf

#endif
