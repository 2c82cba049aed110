#ifndef ZSF_REPSIM_HPP
#define ZSF_REPSIM_HPP

#include <vector>

#include "zsf/common.hpp"
#include "zsf/rankone.hpp"

namespace zsf {

// Concrete SL(2,R) model of the A-adapted principal series. Vectors live on
// the two A-orbits of V' ~ R \ {0} (see AdaptedVector in rankone.hpp); the
// A-action is a character times orbit translation,
//   (U(a_s) f)(omega, u) = chi_lambda(a_s) f(omega, u - s),
// with chi_lambda(a_s) = exp(i * ell_gd * s).

// Character of A at the group point with geodesic coordinate s.
Complex adapted_character(const RankOneSpace& space,
                          const SpectralParam& lambda, double s);

AdaptedVector adapted_action(const RankOneSpace& space,
                             const SpectralParam& lambda, double a_s,
                             const AdaptedVector& f);

// Weighted orbit norm ||f||^2 = sum_omega int |f|^2 e^{2 Re(lambda) rho H}
// ds (the defining norm of the lambda-realization; the weight is 1 on the
// unitary axis).
double orbit_norm_sq(const RankOneSpace& space, const AdaptedVector& f);

// Duality pairing (f, g) = sum_omega int f(omega,u) conj(g(omega,u)) du for
// g in the contragredient realization.
Complex adapted_pairing(const RankOneSpace& space, const AdaptedVector& f,
                        const AdaptedVector& g);

// Matrix coefficient c_{f,g}(a_s) by direct orbit quadrature; g must live in
// the contragredient realization lambda' = -conj(lambda) (rho-units).
struct MatrixCoefficient {
    std::vector<double> s_grid;
    std::vector<Complex> values;
    SpectralParam lambda;
};

MatrixCoefficient matrix_coefficient_direct(const RankOneSpace& space,
                                            const AdaptedVector& f,
                                            const AdaptedVector& g,
                                            const std::vector<double>& s_grid);

// Per-orbit modified Fourier transform at geodesic-dual upsilon:
//   f~(u, omega) = int e^{-i u s} chi_lambda(a_s)^{-1} f(omega, s) ds.
Complex adapted_transform(const RankOneSpace& space, const AdaptedVector& f,
                          double upsilon, int omega);

// Spectral density of the pair: m_{f,g}(u) = (2 pi)^{-1} sum_omega
// f~(u,omega) conj(g~(u,omega)), so that c_{f,g}(a_s) = int e^{-ius} m du.
std::vector<Complex> bochner_from_vectors(const RankOneSpace& space,
                                          const AdaptedVector& f,
                                          const AdaptedVector& g,
                                          const std::vector<double>& u_grid);
Complex bochner_from_vectors_at(const RankOneSpace& space,
                                const AdaptedVector& f,
                                const AdaptedVector& g, double upsilon);

// Fourier integral of m_{f,g} at the group point a_s.
Complex coefficient_via_bochner(const RankOneSpace& space,
                                const AdaptedVector& f,
                                const AdaptedVector& g, double s,
                                double abs_tol = 1e-8);

// max_s | direct - Fourier(m) | over the samples (unitary lambda).
double theorem_41_check(const RankOneSpace& space, const AdaptedVector& f,
                        const AdaptedVector& g,
                        const std::vector<double>& s_samples);

// Same comparison for the K-fixed pair at strip lambda; also exposed is the
// defect between the orbit-transform density and the closed Gamma/2F1 form
// (after matching the shared normalization at u = 0).
struct Theorem51Result {
    double coefficient_defect;
    double density_defect;
};
Theorem51Result theorem_51_check(const RankOneSpace& space,
                                 const SpectralParam& lambda,
                                 const std::vector<double>& s_samples);

// Smooth compactly supported bump on one orbit, for test vectors:
// exp(-1/(1-((s-center)/width)^2)) on |s-center| < width, else 0.
AdaptedVector bump_vector(const SpectralParam& lambda, int omega,
                          double center, double width);

} // namespace zsf

#endif
