#ifndef ZSF_SPACE_HPP
#define ZSF_SPACE_HPP

#include "zsf/common.hpp"
#include "zsf/errors.hpp"

namespace zsf {

// A rank-one Riemannian symmetric space of noncompact type, described by the
// restricted-root multiplicities p = dim g_alpha, q = dim g_{2alpha}.
//
// All radial quantities use the geodesic coordinate t = alpha(log a); in that
// coordinate rho evaluates to (p+2q)/2 and the holomorphic tube has radius pi.
struct RankOneSpace {
    int p = 1;
    int q = 0;

    RankOneSpace() = default;
    RankOneSpace(int p_, int q_) : p(p_), q(q_) {
        if (p < 1 || q < 0)
            throw DomainError(ErrorCode::InvalidArgument,
                              "need p >= 1 and q >= 0");
    }

    double r() const { return (p + 2 * q) / 4.0; }
    double helgason_c() const { return 1.0 / (4.0 * (p + 4 * q)); }
    // rho in alpha-units; equals rho in the geodesic coordinate.
    double rho_alpha() const { return (p + 2 * q) / 2.0; }
    // Closed-form cross-section data exists only when the 2alpha root is
    // absent; q > 0 results are flagged experimental.
    bool exact() const { return q == 0; }

    bool operator==(const RankOneSpace& o) const {
        return p == o.p && q == o.q;
    }

    static RankOneSpace sl2r() { return RankOneSpace(1, 0); }
};

// Point of V' = V \ {e} in the two-root-space coordinates: norms of the
// g_{-alpha} and g_{-2alpha} components (Helgason's normalization, the one in
// which e^{rho H} = [(1+c|X|^2)^2 + 4c|Y|^2]^{(p+2q)/4}).
struct VPoint {
    double x_norm = 0.0;
    double y_norm = 0.0;
};

// Complexified geodesic coordinate. Tube evaluation requires |Im t| < pi.
struct TubePoint {
    Complex t;
    bool in_tube() const { return std::abs(t.imag()) < kPi; }
};

} // namespace zsf

#endif
