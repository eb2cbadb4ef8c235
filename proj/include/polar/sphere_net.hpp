#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace polar {

enum class NetKind {
    automatic,   ///< s0 for d=1, angle_grid for d=2, spherical for d>=3
    s0,          ///< the two points of S^0
    angle_grid,  ///< equally spaced angles on S^1
    spherical,   ///< recursive spherical coordinates (polar bands times a net of S^{d-2})
    cube,        ///< radially projected grid on the faces of [-1,1]^d
};

std::string to_string(NetKind kind);
NetKind net_kind_from_string(const std::string& name);

inline constexpr std::size_t kDefaultNetBudget = 20'000'000;

/// A finite point set whose covering radius (Euclidean) is at most `delta`.
struct SphereNet {
    int dim = 0;
    double delta = 0.0;
    NetKind kind = NetKind::automatic;
    std::vector<double> points;  ///< row-major, size() * dim entries
    /// C in size() = (C / delta)^(d-1); 0 for d = 1.
    double constant = 0.0;

    std::size_t size() const { return dim == 0 ? 0 : points.size() / dim; }
    std::span<const double> operator[](std::size_t i) const {
        return {points.data() + i * dim, static_cast<std::size_t>(dim)};
    }
};

/// Number of points sphere_net(d, delta, kind) would produce, or budget + 1 if larger.
std::size_t sphere_net_size(int d, double delta, NetKind kind = NetKind::automatic,
                            std::size_t budget = kDefaultNetBudget);

/// Deterministic delta-net of S^{d-1}. Throws std::invalid_argument unless d >= 1 and
/// 0 < delta < 2, and BudgetExceeded when the point count would pass `budget`.
SphereNet sphere_net(int d, double delta, NetKind kind = NetKind::automatic,
                     std::size_t budget = kDefaultNetBudget);

}  // namespace polar
