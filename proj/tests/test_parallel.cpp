#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// The OpenMP kernels are pure maps: every output slot is written by exactly
// one iteration, so the parallel results must be bit-identical to the serial
// reference for any thread count.

#include "zsf/bochner.hpp"
#include "zsf/parallel.hpp"
#include "zsf/rankone.hpp"
#include "zsf/spherical.hpp"
#include "zsf/transforms.hpp"

using zsf::Complex;
using zsf::RankOneSpace;
using zsf::SpectralParam;

TEST_CASE("density grid: OpenMP kernel matches the serial reference bitwise") {
    std::vector<double> grid;
    for (double u = -30.0; u <= 30.0; u += 0.37) grid.push_back(u);

    auto den = zsf::bochner_density(RankOneSpace::sl2r(),
                                    SpectralParam::geodesic(Complex(1.1)));
    const auto par = den.sample(grid);
    const auto ser = den.sample_serial(grid);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) CHECK(par[i] == ser[i]);

    // experimental q > 0 path too (small grid, quadrature inside)
    auto dq = zsf::bochner_density(RankOneSpace(2, 1),
                                   SpectralParam::geodesic(Complex(0.5)));
    std::vector<double> small{-2.0, -0.5, 0.0, 1.0, 3.0};
    const auto pq = dq.sample(small);
    const auto sq = dq.sample_serial(small);
    for (std::size_t i = 0; i < pq.size(); ++i) CHECK(pq[i] == sq[i]);
}

TEST_CASE("phi grid: OpenMP kernel matches the serial reference bitwise") {
    auto den = zsf::bochner_density(RankOneSpace::sl2r(),
                                    SpectralParam::geodesic(Complex(0.6)));
    std::vector<Complex> ts;
    for (double t = 0.0; t <= 3.0; t += 0.21) ts.push_back(Complex(t, 0.1));
    const auto par = zsf::phi_grid(den, ts, 1e-8);
    const auto ser = zsf::phi_grid_serial(den, ts, 1e-8);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].value == ser[i].value);
        CHECK(par[i].abs_err == ser[i].abs_err);
    }
}

TEST_CASE("abel grid parallel map matches pointwise evaluation") {
    auto f = zsf::truncated_gaussian(0.9);
    const auto ts = zsf::linspace(-3.0, 3.0, 41);
    const auto grid = zsf::abel_transform(f, ts);
    for (std::size_t i = 0; i < ts.size(); ++i)
        CHECK(grid[i] == zsf::abel_transform_at(f, ts[i]));
}

TEST_CASE("thread count report") {
    CHECK(zsf::max_threads() >= 1);
    MESSAGE("max threads: " << zsf::max_threads());
}
