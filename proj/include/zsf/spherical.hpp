#ifndef ZSF_SPHERICAL_HPP
#define ZSF_SPHERICAL_HPP

#include <vector>

#include "zsf/bochner.hpp"
#include "zsf/common.hpp"
#include "zsf/space.hpp"
#include "zsf/spectral.hpp"

namespace zsf {

enum class PhiMethod { BochnerFourier, HcSeries, Oracle };

const char* phi_method_name(PhiMethod m);

struct SphericalValue {
    Complex value;
    PhiMethod method;
    double abs_err;
};

// phi_lambda at the (complex) geodesic coordinate t through the density:
//   phi = int_R e^{-i u t} m(lambda, u) du = 2 int_0^U cos(u t) m(u) du,
// valid for |Im t| < pi. Within 0.02 of the tube boundary the value is still
// returned but with an enlarged error estimate (SlowConvergence regime).
SphericalValue phi_via_bochner(const BochnerDensity& density, Complex t,
                               double abs_tol = 1e-9);
SphericalValue phi_via_bochner(const RankOneSpace& space,
                               const SpectralParam& lambda, Complex t,
                               double abs_tol = 1e-9);

// Residue series for phi_lambda(a_t), q = 0, lambda unitary nonzero, t > 0:
//   phi(t) = sum_k  N_k(l) e^{(-il-2r-2k)t} + N_k(-l) e^{(il-2r-2k)t}
//   N_k(l) = 4 pi C res_k Gamma(2r+k) Gamma(2r+k+il) Gamma(-k-il)
//              / (Gamma(2r+il) Gamma(2r-il)),
// with res_k = (-1)^k/k!, C the unit-mass constant Gamma(4r)/(4 pi
// Gamma(2r)^2), l = lambda in geodesic-dual units. Successive terms shrink
// like e^{-2t}; the returned abs_err is a geometric tail bound.
struct HcSeriesTerm {
    int k;
    int weyl_sign;       // +1 pairs with e^{+i l t}, -1 with e^{-i l t}
    Complex coefficient; // N_k(sign * l)
    double exponent;     // 2r + 2k (coefficient of -t in the decay factor)
};

std::vector<HcSeriesTerm> hc_series_terms(const RankOneSpace& space,
                                          const SpectralParam& lambda,
                                          int terms);

SphericalValue phi_hc_series(const RankOneSpace& space,
                             const SpectralParam& lambda, double t,
                             int max_terms = 48, double abs_tol = 1e-10);

// Leading asymptotic coefficient: phi(t) ~ c(l) e^{(il-2r)t} + c(-l)
// e^{(-il-2r)t} with c(l) = Gamma(4r)/Gamma(2r) * Gamma(il)/Gamma(2r+il).
Complex hc_leading_coefficient(const RankOneSpace& space,
                               const SpectralParam& lambda);

// Fit of the boundary blow-up phi(i(pi - eps)) ~ c_log ln(1/eps) + c_const.
struct SingularityFit {
    double c_log;
    double c_const;
    double fit_quality;      // max residual / value range
    double prediction_error; // leave-last-out prediction, relative to range
};

SingularityFit singularity_probe(const BochnerDensity& density,
                                 const std::vector<double>& eps_grid);

// Grid evaluation of phi at many points (OpenMP kernel + serial reference).
std::vector<SphericalValue> phi_grid(const BochnerDensity& density,
                                     const std::vector<Complex>& ts,
                                     double abs_tol = 1e-9);
std::vector<SphericalValue> phi_grid_serial(const BochnerDensity& density,
                                            const std::vector<Complex>& ts,
                                            double abs_tol = 1e-9);

} // namespace zsf

#endif
