#ifndef ZSF_SPECFUN_HPP
#define ZSF_SPECFUN_HPP

#include "zsf/common.hpp"

namespace zsf {

// Log of the Gamma function for complex z, Lanczos approximation with
// reflection for Re z < 1/2. exp(ln_gamma(z)) is accurate to ~1e-13 relative
// inside |z| <= 100, |Im z| <= 200.
//
// Throws PoleOfGamma when z is within 1e-14 of a non-positive integer.
Complex ln_gamma(Complex z);

Complex gamma(Complex z);

// Residue of Gamma at z = -k:  (-1)^k / k!
double gamma_residue(int k);

// log(sin(pi z)), stable for large |Im z| (avoids overflow of sin itself).
Complex log_sin_pi(Complex z);

Complex beta(Complex a, Complex b);

// (a)_n rising factorial.
Complex pochhammer(Complex a, int n);

// Stirling magnitude envelope sqrt(2 pi) |y|^{x-1/2} e^{-pi |y|/2} of
// |Gamma(x+iy)| for large |y|; used to size truncation windows.
double gamma_magnitude_envelope(double x, double y);

// Gauss hypergeometric 2F1(a,b;c;z) for real z in (-1, 1].
//   z in [0,1/2]  direct series
//   z in (1/2,1)  z -> 1-z connection formula (c-a-b must not be an integer)
//   z = 1         Gauss summation, requires Re(c-a-b) > 0
//   z in (-1,0)   Pfaff transformation z -> z/(z-1), which lands in (0,1/2)
Complex gauss_2f1(Complex a, Complex b, Complex c, double z,
                  const SeriesBudget& budget = SeriesBudget{});

// Relative defect of the quadratic transformation
//   F(alpha,beta;2beta;z) = (1-z)^{-alpha/2}
//       F(alpha/2, beta-alpha/2; beta+1/2; z^2/(4(z-1)))
// Both hypergeometric arguments must lie in the convergence range.
double quadratic_transform_check(Complex alpha, Complex beta, double z,
                                 const SeriesBudget& budget = SeriesBudget{});

} // namespace zsf

#endif
