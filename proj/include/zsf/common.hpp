#ifndef ZSF_COMMON_HPP
#define ZSF_COMMON_HPP

#include <cmath>
#include <complex>
#include <cstdint>

namespace zsf {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// log(1 + e^x) without overflow for large positive x
inline double log1p_exp(double x) {
    return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

// Term/accuracy budget for power-series evaluation.
struct SeriesBudget {
    int max_terms = 4000;
    double rel_tol = 1e-14;

    bool valid() const {
        return rel_tol >= 8.0 * 2.220446049250313e-16 && max_terms > 0 &&
               max_terms <= 1000000;
    }
};

// Result of a simple linear least-squares fit y ~ slope*x + intercept.
struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double max_residual = 0.0;
};

} // namespace zsf

#endif
