#ifndef ZSF_BOCHNER_HPP
#define ZSF_BOCHNER_HPP

#include <functional>
#include <vector>

#include "zsf/common.hpp"
#include "zsf/space.hpp"
#include "zsf/spectral.hpp"

namespace zsf {

// The master integral  I(a,b,theta) = int_0^inf t^a [1 + 2 t cos(theta) +
// t^2]^{-b} dt, theta in [0, pi/2], Re a > -1, Re(2b - a - 1) > 0.
// Quadrature route (after t = e^u) and Gamma/2F1 closed form
//   I = Gamma(a+1) Gamma(2b-a-1) / Gamma(2b)
//         * F((a+1)/2, b-(a+1)/2; b+1/2; sin^2 theta).
Complex master_integral_quad(Complex a, Complex b, double theta,
                             double abs_tol = 1e-10);
Complex master_integral_closed(Complex a, Complex b, double theta);

// Orbit transform of the K-fixed vector at cross-section angle theta
// (cos theta = c|X|^2), lambda in the strip:
//   f~ = Gamma(r(1+l-iu)) Gamma(r(1+l+iu)) / Gamma(r(2+2l))
//          * F(r(1+l-iu)/2, r(1+l+iu)/2; r(1+l)+1/2; sin^2 theta)
// with l = lambda in rho-units and u = upsilon in rho-units.
Complex f_tilde(const RankOneSpace& space, const SpectralParam& lambda,
                double upsilon_rho, double theta);

// Cross-section weight for the theta-integral when the 2alpha root is
// present. No closed form is available; the default is the sphere-induced
// guess sin^{p-1} cos^{q-1}, and densities built from it are experimental.
struct CrossSection {
    std::function<double(double)> weight; // on [0, pi/2], non-negative
    std::string family = "sphere-induced";

    static CrossSection default_for(const RankOneSpace& space);
};

// Spectral density m(lambda, .) of phi_lambda restricted to A, normalized to
// unit mass on the unitary axis (equivalently phi_lambda(e) = 1):
//   phi_lambda(a_t) = int_R e^{-i u t} m(lambda, u) du
// in the geodesic-dual coordinate u. For q = 0 the density is the closed
// Gamma product; for q > 0 it is a theta-integral against the cross-section
// weight and carries the experimental flag.
class BochnerDensity {
public:
    BochnerDensity(const RankOneSpace& space, const SpectralParam& lambda,
                   CrossSection cs);

    // density value at geodesic-dual upsilon; complex for generic strip
    // lambda, real (up to rounding) on the unitary axis and for real
    // rho-units lambda.
    Complex value(double upsilon) const { return value_damped(upsilon, 0.0); }
    double operator()(double upsilon) const { return value(upsilon).real(); }

    // e^{damp * upsilon} * m(upsilon), assembled in log space. The damped
    // Fourier integrand near the tube boundary needs this: the factors
    // overflow/underflow separately while the product stays finite.
    Complex value_damped(double upsilon, double damp) const;

    // OpenMP grid kernel and its serial reference.
    std::vector<double> sample(const std::vector<double>& grid) const;
    std::vector<double> sample_serial(const std::vector<double>& grid) const;

    const RankOneSpace& space() const { return space_; }
    const SpectralParam& lambda() const { return lambda_; }
    bool closed_form() const { return space_.q == 0; }
    bool experimental() const { return space_.q != 0; }
    double normalization() const { return normalization_; }

    // Truncation point U beyond which the tail mass (with damping
    // e^{|im_t| u}) is below tol.
    double truncation(double tol, double im_t = 0.0) const;

private:
    Complex unnormalized(double upsilon) const {
        return value_damped_unnorm(upsilon, 0.0);
    }
    Complex value_damped_unnorm(double upsilon, double damp) const;

    RankOneSpace space_;
    SpectralParam lambda_;
    CrossSection cross_section_;
    Complex ell_gd_;      // lambda in geodesic-dual units
    Complex ln_den_;      // ln Gamma(2r+i ell) + ln Gamma(2r-i ell)
    double normalization_ = 1.0;
};

BochnerDensity bochner_density(const RankOneSpace& space,
                               const SpectralParam& lambda);
BochnerDensity bochner_density(const RankOneSpace& space,
                               const SpectralParam& lambda,
                               const CrossSection& cs);

// Gamma factorization m = Upsilon(l,u) Upsilon(-l,u) h(l,u), rho-units:
//   Upsilon(l,u) = Gamma(r(1+l-iu)) Gamma(r(1+l+iu)) / Gamma(r(2+2l)).
struct BochnerFactorization {
    Complex upsilon_plus;
    Complex upsilon_minus;
    Complex h;
};
BochnerFactorization bochner_factorization(const BochnerDensity& density,
                                           double upsilon);

// Exponential decay rate of m(lambda, .) by least squares on log m with the
// Stirling polynomial envelope removed. The fitted rate recovers the tube
// radius pi (geodesic-dual coordinate).
struct DecayFit {
    double rate;
    double r_squared;
};
DecayFit fit_decay_rate(const BochnerDensity& density, double upsilon_lo,
                        double upsilon_hi, int points = 81);

enum class PositivityStatus {
    GridNonNegative, // m >= -tol on the grid
    SignIndefinite,  // negative values detected
    DiracDegenerate, // lambda = +-rho: measure degenerates to a point mass
    Unconstrained,   // lambda outside the positivity hypotheses
};

struct PositivityResult {
    PositivityStatus status;
    double min_value;
    bool positive() const {
        return status == PositivityStatus::GridNonNegative ||
               status == PositivityStatus::DiracDegenerate;
    }
};

// Positive-definiteness of phi_lambda|_A through the sign of the density,
// for lambda imaginary or real in rho-units (|l| <= 1). The boundary
// lambda = +-rho is reported as the Dirac-degenerate status rather than
// grid-checked. Other lambda return Unconstrained with the observed minimum
// of Re m.
PositivityResult positivity_check(const RankOneSpace& space,
                                  const SpectralParam& lambda,
                                  const std::vector<double>& upsilon_grid,
                                  double tol = 1e-10);

LinearFit linear_least_squares(const std::vector<double>& x,
                               const std::vector<double>& y);

} // namespace zsf

#endif
