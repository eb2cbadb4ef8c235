#include "polar/sphere_net.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "polar/config.hpp"

namespace polar {

namespace {

constexpr double kPi = std::numbers::pi;

// Smallest m with 2*pi/m <= 2*asin(delta/2), i.e. consecutive chords <= delta.
std::size_t angle_grid_count(double delta) {
    if (delta >= 2.0) return 1;
    const double gap = 2.0 * std::asin(delta / 2.0);
    return static_cast<std::size_t>(std::ceil((2.0 * kPi / gap) * (1.0 - 1e-12)));
}

struct Bands {
    std::size_t count;
    double width;
};

Bands polar_bands(double delta) {
    const auto j = static_cast<std::size_t>(std::ceil(kPi / std::min(delta, kPi)));
    return {j, kPi / static_cast<double>(j)};
}

// Radius left for the S^{d-2} factor of band centred at theta.
double band_sub_delta(double delta, double width, double theta) {
    return (delta - width / 2.0) / std::sin(theta);
}

std::size_t saturating_add(std::size_t a, std::size_t b, std::size_t cap) {
    return (a > cap || b > cap || a + b > cap) ? cap + 1 : a + b;
}

std::size_t count_spherical(int d, double delta, std::size_t budget) {
    if (d == 1) return delta >= 2.0 ? 1 : 2;
    if (d == 2) return std::min(angle_grid_count(delta), budget + 1);
    if (delta >= 2.0) return 1;
    const Bands b = polar_bands(delta);
    std::size_t total = 0;
    for (std::size_t j = 0; j < b.count; ++j) {
        const double theta = (static_cast<double>(j) + 0.5) * b.width;
        total = saturating_add(total, count_spherical(d - 1, band_sub_delta(delta, b.width, theta), budget),
                               budget);
        if (total > budget) return budget + 1;
    }
    return total;
}

// Points of the recursive net of S^{d-1}, row-major.
std::vector<double> spherical_points(int d, double delta) {
    std::vector<double> pts;
    if (d == 1) {
        pts.push_back(1.0);
        if (delta < 2.0) pts.push_back(-1.0);
        return pts;
    }
    if (d == 2) {
        const std::size_t m = angle_grid_count(delta);
        pts.reserve(2 * m);
        for (std::size_t k = 0; k < m; ++k) {
            const double a = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(m);
            pts.push_back(std::cos(a));
            pts.push_back(std::sin(a));
        }
        return pts;
    }
    if (delta >= 2.0) {
        pts.assign(static_cast<std::size_t>(d), 0.0);
        pts[0] = 1.0;
        return pts;
    }
    const Bands b = polar_bands(delta);
    const auto du = static_cast<std::size_t>(d);
    for (std::size_t j = 0; j < b.count; ++j) {
        const double theta = (static_cast<double>(j) + 0.5) * b.width;
        const double s = std::sin(theta);
        const double c = std::cos(theta);
        const std::vector<double> sub = spherical_points(d - 1, band_sub_delta(delta, b.width, theta));
        const std::size_t m = sub.size() / (du - 1);
        for (std::size_t k = 0; k < m; ++k) {
            for (std::size_t r = 0; r + 1 < du; ++r) pts.push_back(s * sub[k * (du - 1) + r]);
            pts.push_back(c);
        }
    }
    return pts;
}

std::size_t cube_per_axis(int d, double delta) {
    return static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(d - 1)) / delta));
}

std::size_t count_cube(int d, double delta, std::size_t budget) {
    if (d == 1) return 2;
    const std::size_t k = cube_per_axis(d, delta);
    std::size_t total = 2 * static_cast<std::size_t>(d);
    for (int a = 0; a < d - 1; ++a) {
        if (total > budget / k + 1) return budget + 1;
        total *= k;
    }
    return total > budget ? budget + 1 : total;
}

std::vector<double> cube_points(int d, double delta) {
    if (d == 1) return {1.0, -1.0};
    const std::size_t k = cube_per_axis(d, delta);
    const auto du = static_cast<std::size_t>(d);
    std::vector<double> pts;
    std::vector<std::size_t> idx(du - 1, 0);
    std::vector<double> y(du);
    for (std::size_t face = 0; face < 2 * du; ++face) {
        const std::size_t axis = face / 2;
        const double sign = face % 2 == 0 ? 1.0 : -1.0;
        std::fill(idx.begin(), idx.end(), 0);
        for (;;) {
            std::size_t t = 0;
            for (std::size_t r = 0; r < du; ++r) {
                if (r == axis) {
                    y[r] = sign;
                } else {
                    y[r] = -1.0 + (2.0 * static_cast<double>(idx[t]) + 1.0) / static_cast<double>(k);
                    ++t;
                }
            }
            const double len = norm(y);
            for (double v : y) pts.push_back(v / len);
            std::size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == k) idx[pos++] = 0;
            if (pos == idx.size()) break;
        }
    }
    return pts;
}

NetKind resolve(int d, NetKind kind) {
    if (kind != NetKind::automatic) return kind;
    if (d == 1) return NetKind::s0;
    if (d == 2) return NetKind::angle_grid;
    return NetKind::spherical;
}

void check_args(int d, double delta, NetKind kind) {
    if (d < 1) throw std::invalid_argument("sphere_net: dimension must be >= 1");
    if (!(delta > 0.0 && delta < 2.0)) throw std::invalid_argument("sphere_net: delta must lie in (0, 2)");
    if (kind == NetKind::s0 && d != 1) throw std::invalid_argument("sphere_net: s0 net requires d = 1");
    if (kind == NetKind::angle_grid && d != 2)
        throw std::invalid_argument("sphere_net: angle grid requires d = 2");
}

}  // namespace

std::string to_string(NetKind kind) {
    switch (kind) {
        case NetKind::automatic: return "automatic";
        case NetKind::s0: return "s0";
        case NetKind::angle_grid: return "angle_grid";
        case NetKind::spherical: return "spherical";
        case NetKind::cube: return "cube";
    }
    return "unknown";
}

NetKind net_kind_from_string(const std::string& name) {
    for (NetKind k : {NetKind::automatic, NetKind::s0, NetKind::angle_grid, NetKind::spherical, NetKind::cube})
        if (to_string(k) == name) return k;
    throw std::invalid_argument("unknown net kind '" + name + "'");
}

std::size_t sphere_net_size(int d, double delta, NetKind kind, std::size_t budget) {
    kind = resolve(d, kind);
    check_args(d, delta, kind);
    switch (kind) {
        case NetKind::cube: return count_cube(d, delta, budget);
        default: return count_spherical(d, delta, budget);
    }
}

SphereNet sphere_net(int d, double delta, NetKind kind, std::size_t budget) {
    kind = resolve(d, kind);
    const std::size_t n = sphere_net_size(d, delta, kind, budget);
    if (n > budget)
        throw BudgetExceeded("sphere_net: a net of S^" + std::to_string(d - 1) + " at delta " +
                             std::to_string(delta) + " exceeds the point budget " + std::to_string(budget));
    SphereNet net;
    net.dim = d;
    net.delta = delta;
    net.kind = kind;
    net.points = kind == NetKind::cube ? cube_points(d, delta) : spherical_points(d, delta);
    if (d > 1) net.constant = delta * std::pow(static_cast<double>(net.size()), 1.0 / (d - 1));
    return net;
}

}  // namespace polar
