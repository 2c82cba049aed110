// Benchmark: OpenMP grid kernels against their serial references.

#include <chrono>
#include <cstdio>
#include <vector>

#include "zsf/bochner.hpp"
#include "zsf/parallel.hpp"
#include "zsf/rankone.hpp"
#include "zsf/spherical.hpp"
#include "zsf/transforms.hpp"

using zsf::Complex;

namespace {

template <class F>
double time_s(F&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t0)
        .count();
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %5.2fx\n",
                name, serial, parallel, serial / parallel);
}

} // namespace

int main() {
    std::printf("threads: %d\n", zsf::max_threads());
    const auto sl2 = zsf::RankOneSpace::sl2r();
    const auto lam = zsf::SpectralParam::geodesic(Complex(0.8));

    {
        auto den = zsf::bochner_density(sl2, lam);
        std::vector<double> grid;
        for (double u = -40.0; u <= 40.0; u += 0.002) grid.push_back(u);
        std::vector<double> a, b;
        const double ts = time_s([&] { a = den.sample_serial(grid); });
        const double tp = time_s([&] { b = den.sample(grid); });
        if (a != b) {
            std::printf("density kernel mismatch!\n");
            return 1;
        }
        report("density grid (40k points)", ts, tp);
    }

    {
        auto den = zsf::bochner_density(sl2, lam);
        std::vector<Complex> ts_grid;
        for (double t = 0.05; t <= 4.0; t += 0.0625)
            ts_grid.push_back(Complex(t, 0.0));
        std::vector<zsf::SphericalValue> a, b;
        const double ts = time_s([&] {
            a = zsf::phi_grid_serial(den, ts_grid, 1e-9);
        });
        const double tp =
            time_s([&] { b = zsf::phi_grid(den, ts_grid, 1e-9); });
        bool same = a.size() == b.size();
        for (std::size_t i = 0; same && i < a.size(); ++i)
            same = a[i].value == b[i].value;
        if (!same) {
            std::printf("phi kernel mismatch!\n");
            return 1;
        }
        report("phi sweep (64 points)", ts, tp);
    }

    {
        auto f = zsf::truncated_gaussian(1.0);
        auto grid = zsf::symmetric_grid(16.0, 0.04);
        zsf::SpectralProfile prof;
        const double tt = time_s([&] {
            prof = zsf::spherical_transform(f, grid);
        });
        std::printf("%-28s %8.3fs (parallel over the lambda grid)\n",
                    "spherical transform", tt);
        std::vector<double> us;
        for (double u = 0.0; u <= 16.0; u += 0.02) us.push_back(u);
        if (us.size() % 2 == 0) us.push_back(us.back() + 0.02);
        std::vector<double> fs;
        const double tf = time_s([&] { fs = zsf::spectral_ff(prof, us); });
        std::printf("%-28s %8.3fs (%zu points)\n", "spectral F^s grid", tf,
                    us.size());
    }

    return 0;
}
