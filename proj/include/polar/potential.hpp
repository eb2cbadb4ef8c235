#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "polar/config.hpp"

namespace polar {

/// |x|^p, with exact fast paths for p = 1 and p = 2.
inline double abs_pow(double x, double p) {
    const double a = std::abs(x);
    if (p == 1.0) return a;
    if (p == 2.0) return a * a;
    return std::pow(a, p);
}

/// U^p(config, v) = sum_i |<v, u_i>|^p, summed in index order. No validation.
inline double potential_unchecked(const Configuration& config, std::span<const double> v, double p) {
    double s = 0.0;
    for (std::size_t i = 0; i < config.size(); ++i) s += abs_pow(dot(v, config[i]), p);
    return s;
}

/// The l_p-potential of the configuration at the unit vector v.
double potential(const Configuration& config, std::span<const double> v, Exponent p);

struct RefineResult {
    std::vector<double> direction;
    double value = 0.0;
    int steps = 0;
    bool stalled = false;  ///< the ascent direction vanished at the start point
};

/// Fixed-point ascent v <- normalize(sum_i sgn<v,u_i> |<v,u_i>|^{p-1} u_i) from v0.
/// Never returns a direction worse than v0 (beyond 1e-15). Kinks where some
/// <v,u_i> = 0 are escaped by trial moves along +-u_i when p <= 1.
RefineResult local_refine(const Configuration& config, Exponent p, std::span<const double> v0);

}  // namespace polar
