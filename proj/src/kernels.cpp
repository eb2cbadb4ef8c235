#include "polar/kernels.hpp"

#include <cmath>
#include <numbers>

#include "polar/parallel.hpp"
#include "polar/potential.hpp"

namespace polar::kernels {

namespace {

double torus_value(std::span<const double> angles, double p, std::size_t j, std::size_t m) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
    double s = 0.0;
    for (double a : angles) s += abs_pow(2.0 * std::sin((phi - a) / 2.0), p);
    return s;
}

}  // namespace

ArgMax argmax(std::span<const double> values) {
    ArgMax best{0, values.empty() ? 0.0 : values[0]};
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] > best.value) best = {i, values[i]};
    return best;
}

double log_sum_exp(std::span<const double> values, double beta) {
    const double top = argmax(values).value;
    double s = 0.0;
    for (double v : values) s += std::exp(beta * (v - top));
    return top + std::log(s) / beta;
}

namespace serial {

std::vector<double> potentials(const Configuration& config, double p, std::span<const double> points) {
    const auto d = static_cast<std::size_t>(config.dim());
    std::vector<double> out(points.size() / d);
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = potential_unchecked(config, points.subspan(j * d, d), p);
    return out;
}

ArgMax potential_argmax(const Configuration& config, double p, std::span<const double> points) {
    const auto d = static_cast<std::size_t>(config.dim());
    ArgMax best{0, -1.0};
    for (std::size_t j = 0; j < points.size() / d; ++j) {
        const double v = potential_unchecked(config, points.subspan(j * d, d), p);
        if (v > best.value) best = {j, v};
    }
    return best;
}

ArgMax torus_grid_max(std::span<const double> angles, double p, std::size_t m) {
    ArgMax best{0, -1.0};
    for (std::size_t j = 0; j < m; ++j) {
        const double v = torus_value(angles, p, j, m);
        if (v > best.value) best = {j, v};
    }
    return best;
}

}  // namespace serial

namespace parallel {

std::vector<double> potentials(const Configuration& config, double p, std::span<const double> points) {
    const auto d = static_cast<std::size_t>(config.dim());
    return parallel_map<double>(points.size() / d, [&](std::size_t j) {
        return potential_unchecked(config, points.subspan(j * d, d), p);
    });
}

ArgMax potential_argmax(const Configuration& config, double p, std::span<const double> points) {
    const auto values = potentials(config, p, points);
    return argmax(values);
}

ArgMax torus_grid_max(std::span<const double> angles, double p, std::size_t m) {
    const auto values = parallel_map<double>(m, [&](std::size_t j) { return torus_value(angles, p, j, m); });
    return argmax(values);
}

}  // namespace parallel

}  // namespace polar::kernels
