#pragma once

#include <cmath>
#include <vector>

#include "polar/config.hpp"
#include "polar/rng.hpp"
#include "polar/search.hpp"

namespace testing {

inline polar::Configuration mercedes() {
    const double h = std::sqrt(3.0) / 2.0;
    return polar::Configuration::from_rows(2, {{1.0, 0.0}, {-0.5, h}, {-0.5, -h}});
}

inline polar::Configuration single(std::vector<double> u) {
    return polar::Configuration::from_rows(static_cast<int>(u.size()), {u});
}

// Brute-force maximum of the potential over a dense angle grid on S^1.
inline double circle_grid_max(const polar::Configuration& c, double p, int m) {
    double best = 0.0;
    for (int j = 0; j < m; ++j) {
        const double t = 2.0 * M_PI * j / m;
        double s = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i) s += std::pow(std::abs(std::cos(t) * c[i][0] + std::sin(t) * c[i][1]), p);
        best = std::max(best, s);
    }
    return best;
}

// A random orthogonal matrix (QR of a Gaussian matrix by Gram-Schmidt).
inline std::vector<double> random_rotation(int d, std::uint64_t seed) {
    polar::CounterRng rng(seed, 99);
    std::vector<std::vector<double>> q;
    while (static_cast<int>(q.size()) < d) {
        std::vector<double> v(d);
        for (double& x : v) x = rng.normal();
        for (const auto& b : q) {
            const double c = polar::dot(v, b);
            for (int r = 0; r < d; ++r) v[r] -= c * b[r];
        }
        q.push_back(polar::normalized(v));
    }
    std::vector<double> flat;
    for (const auto& row : q) flat.insert(flat.end(), row.begin(), row.end());
    return flat;
}

}  // namespace testing
