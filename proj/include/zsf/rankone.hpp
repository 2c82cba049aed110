#ifndef ZSF_RANKONE_HPP
#define ZSF_RANKONE_HPP

#include <array>
#include <functional>

#include "zsf/common.hpp"
#include "zsf/space.hpp"
#include "zsf/spectral.hpp"

namespace zsf {

// xi_{-rho}(w^{-1} x) = [c^2 |X|^4 + 4 c |Y|^2]^{-(p+2q)/4}, the density of
// the A-invariant measure on V' against Haar measure.
double xi_minus_rho(const RankOneSpace& space, const VPoint& v);

// e^{rho H(x)} = [(1 + c|X|^2)^2 + 4 c |Y|^2]^{(p+2q)/4}.
double exp_rho_h(const RankOneSpace& space, const VPoint& v);

using Mat2 = std::array<std::array<double, 2>, 2>;

struct IwasawaFactors {
    double k_angle; // rotation angle of the K factor
    double t;       // A factor diag(e^{t/2}, e^{-t/2}); t equals the
                    // geodesic coordinate of the A part
    double n_entry; // upper unipotent entry
};

// KAN factorization of a unimodular 2x2 real matrix. Throws NotUnimodular if
// |det g - 1| > 1e-12.
IwasawaFactors iwasawa_decompose(const Mat2& g);

Mat2 compose_iwasawa(const IwasawaFactors& f);

// V-point with Helgason coordinate x as a lower-unipotent SL(2,R) matrix.
// The matrix entry is x/2: with that identification the Iwasawa A-part of
// the matrix reproduces exp_rho_h exactly.
Mat2 sl2_vpoint_matrix(double x);

struct OracleValue {
    Complex value;
    double abs_err;
};

// phi_lambda(a_t) by adaptive quadrature of the K-integral
//   c_p  int_0^pi (cosh t - sinh t cos th)^{i*ell - p/2} sin^{p-1} th  dth
// with ell = lambda in geodesic-dual units and c_p fixed by phi(0) = 1.
// Supported for q = 0 spaces only (UnsupportedSpace otherwise).
OracleValue spherical_oracle(const RankOneSpace& space,
                             const SpectralParam& lambda, double t,
                             double abs_tol = 1e-11);

// Independent SL(2,R)-only route: the same K-integral evaluated through
// explicit matrices, phi(a_t) = (2pi)^{-1} int exp((i ell - 1/2) t(a_t k))
// with t(.) read off iwasawa_decompose.
OracleValue spherical_oracle_iwasawa(const RankOneSpace& space,
                                     const SpectralParam& lambda, double t,
                                     double abs_tol = 1e-11);

// A vector in the A-adapted realization, stored as its profile on the two
// A-orbits of V' ~ R \ {0}. Orbit coordinate s: the point x = omega*2*e^{-s}
// (cross-section |x| = 2, the level set xi = 1). The invariant orbit measure
// is ds.
struct AdaptedVector {
    std::function<Complex(int omega, double s)> eval; // omega is +1 or -1
    SpectralParam lambda;
    double s_halfwidth = 40.0; // quadrature window [-S, S]
};

// The K-fixed vector in the lambda-realization for SL(2,R):
//   x  |->  (|x|/2)^{1/2} (1 + x^2/4)^{-(1+ell)/2},   ell = lambda in
// rho-units, equal to xi^{-1/2} e^{-(1+ell) rho H} on V'.
AdaptedVector k_fixed_adapted_vector(const RankOneSpace& space,
                                     const SpectralParam& lambda);

// Same function in the V'-coordinate x (for pointwise identities).
Complex k_fixed_vprime(const RankOneSpace& space, const SpectralParam& lambda,
                       double x);

} // namespace zsf

#endif
