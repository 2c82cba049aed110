#ifndef ZSF_SPECTRAL_HPP
#define ZSF_SPECTRAL_HPP

#include <string>

#include "zsf/common.hpp"
#include "zsf/errors.hpp"
#include "zsf/space.hpp"

namespace zsf {

// Unit conventions for the spectral parameter lambda (a complex linear form
// on the one-dimensional a). Writing ell for the stored number:
//
//   RhoUnits      lambda = ell * rho
//   AlphaUnits    lambda = ell * alpha
//   GeodesicDual  exponent pairing lambda(log a) = i * ell * t with t the
//                 geodesic coordinate; the unitary spectrum is ell real and
//                 the Harish-Chandra expansion reads e^{(i ell - rho) t}.
//
// Conversions (r = (p+2q)/4):
//   ell_alpha = 2r * ell_rho,   ell_gd = -i * ell_alpha = -2 i r * ell_rho.
enum class SpectralUnits { RhoUnits, AlphaUnits, GeodesicDual };

const char* spectral_units_name(SpectralUnits u);

struct SpectralParam {
    Complex value{0.0, 0.0};
    SpectralUnits units = SpectralUnits::GeodesicDual;

    static SpectralParam rho(Complex v) {
        return SpectralParam{v, SpectralUnits::RhoUnits};
    }
    static SpectralParam alpha(Complex v) {
        return SpectralParam{v, SpectralUnits::AlphaUnits};
    }
    static SpectralParam geodesic(Complex v) {
        return SpectralParam{v, SpectralUnits::GeodesicDual};
    }

    Complex in_units(SpectralUnits target, const RankOneSpace& s) const;

    Complex geodesic_dual(const RankOneSpace& s) const {
        return in_units(SpectralUnits::GeodesicDual, s);
    }
    Complex rho_units(const RankOneSpace& s) const {
        return in_units(SpectralUnits::RhoUnits, s);
    }
    Complex alpha_units(const RankOneSpace& s) const {
        return in_units(SpectralUnits::AlphaUnits, s);
    }

    // Unitary axis: real in geodesic-dual units (imaginary in rho-units).
    bool is_unitary(const RankOneSpace& s, double tol = 1e-12) const {
        return std::abs(geodesic_dual(s).imag()) <= tol;
    }

    // Strict strip |Re(lambda in rho-units)| < 1 required for the density
    // representation.
    bool in_strip(const RankOneSpace& s) const {
        return std::abs(rho_units(s).real()) < 1.0;
    }

    // Contragredient parameter: ell' = -conj(ell) in rho-units, which is
    // conj(ell) in geodesic-dual units.
    SpectralParam contragredient(const RankOneSpace& s) const {
        return geodesic(std::conj(geodesic_dual(s)));
    }

    std::string describe(const RankOneSpace& s) const;
};

inline Complex SpectralParam::in_units(SpectralUnits target,
                                       const RankOneSpace& s) const {
    if (target == units) return value;
    const Complex i(0.0, 1.0);
    const double two_r = 2.0 * s.r();
    // normalize to alpha-units first
    Complex a;
    switch (units) {
        case SpectralUnits::AlphaUnits: a = value; break;
        case SpectralUnits::RhoUnits: a = two_r * value; break;
        case SpectralUnits::GeodesicDual: a = i * value; break;
    }
    switch (target) {
        case SpectralUnits::AlphaUnits: return a;
        case SpectralUnits::RhoUnits: return a / two_r;
        case SpectralUnits::GeodesicDual: return -i * a;
    }
    return a;
}

} // namespace zsf

#endif
