// Serial reference kernels against their OpenMP variants.
// Usage: polar_bench [repeats]
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "polar/certify.hpp"
#include "polar/kernels.hpp"
#include "polar/parallel.hpp"
#include "polar/planar.hpp"
#include "polar/search.hpp"
#include "polar/sphere_net.hpp"

using namespace polar;

namespace {

double best_seconds(int repeats, const std::function<double()>& f, double& sink) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        sink += f();
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        best = std::min(best, dt.count());
    }
    return best;
}

void row(const std::string& name, double serial, double parallel, bool same) {
    std::printf("%-34s %10.4f %10.4f %8.2fx  %s\n", name.c_str(), serial, parallel, serial / parallel,
                same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
    double sink = 0.0;
    std::printf("workers %d, best of %d\n", workers(), repeats);
    std::printf("%-34s %10s %10s %9s\n", "kernel", "serial s", "omp s", "speedup");

    {
        const auto c = random_configuration(40, 4, 1);
        const auto net = sphere_net(4, 0.06);
        const std::string name = "potential_argmax d=4 n=40 (" + std::to_string(net.size()) + " pts)";
        const auto a = kernels::serial::potential_argmax(c, 1.5, net.points);
        const auto b = kernels::parallel::potential_argmax(c, 1.5, net.points);
        const double s = best_seconds(repeats, [&] { return kernels::serial::potential_argmax(c, 1.5, net.points).value; }, sink);
        const double p = best_seconds(repeats, [&] { return kernels::parallel::potential_argmax(c, 1.5, net.points).value; }, sink);
        row(name, s, p, a.index == b.index && a.value == b.value);
    }
    {
        const auto angles = equidistributed(12).angles();
        const std::size_t m = 3'000'000;
        const auto a = kernels::serial::torus_grid_max(angles, 2.5, m);
        const auto b = kernels::parallel::torus_grid_max(angles, 2.5, m);
        const double s = best_seconds(repeats, [&] { return kernels::serial::torus_grid_max(angles, 2.5, m).value; }, sink);
        const double p = best_seconds(repeats, [&] { return kernels::parallel::torus_grid_max(angles, 2.5, m).value; }, sink);
        row("torus_grid_max n=12 m=3e6", s, p, a.index == b.index && a.value == b.value);
    }
    {
        const auto c = random_configuration(10, 3, 2);
        const auto a = certified_max_flat(c, Exponent(0.8), 5e-3, false);
        const auto b = certified_max_flat(c, Exponent(0.8), 5e-3, true);
        const double s = best_seconds(repeats, [&] { return certified_max_flat(c, Exponent(0.8), 5e-3, false).upper; }, sink);
        const double p = best_seconds(repeats, [&] { return certified_max_flat(c, Exponent(0.8), 5e-3, true).upper; }, sink);
        row("certified_max_flat d=3 n=10", s, p, a.upper == b.upper && a.witness == b.witness);
    }
    std::printf("(checksum %.6g)\n", sink);
}
