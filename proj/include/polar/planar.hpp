#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polar/config.hpp"

namespace polar {

/// Points z_k = exp(i alpha_k) on the unit circle T, angles kept sorted in [0, 2 pi).
class PlanarConfig {
public:
    PlanarConfig() = default;
    /// Reduces every angle mod 2 pi and sorts.
    explicit PlanarConfig(std::vector<double> angles);

    static PlanarConfig from_configuration(const Configuration& config);
    Configuration to_configuration() const;

    const std::vector<double>& angles() const noexcept { return angles_; }
    std::size_t size() const noexcept { return angles_.size(); }

private:
    std::vector<double> angles_;
};

/// Angle reduced to [0, 2 pi).
double wrap_angle(double a);

/// |exp(ia) - exp(ib)| = 2 |sin((a - b) / 2)|.
double chord(double a, double b);

struct SquaredMap {
    PlanarConfig mapped;   ///< angles 2 alpha_i
    double mapped_point;   ///< 2 phi + pi
};

/// The squaring correspondence: |v' - u_i'| = 2 |<v, u_i>| for v = exp(i phi).
SquaredMap squared_map(const PlanarConfig& config, double v_angle);

/// The n-th roots of unity.
PlanarConfig equidistributed(int n);

/// sum over ordered pairs (j, k) of |z_j - z_k|^p.
double riesz_energy(const PlanarConfig& config, double p);

/// Closed form of the energy of the n-th roots of unity for integer 0 < p < 2n.
double riesz_energy_closed(int n, int p);

/// Closed form when it applies, else the direct double sum.
double equidistributed_energy(int n, double p);

/// sum_k |exp(i psi) - z_k|^p.
double torus_potential(const PlanarConfig& config, double psi, double p);

struct TorusMax {
    double value = 0.0;
    double angle = 0.0;
    std::size_t grid = 0;
};

/// Max of torus_potential over the grid 2 pi j / m, m = points_per_vector * n.
TorusMax torus_grid_max(const PlanarConfig& config, double p, std::size_t points_per_vector = 100'000);

struct PlanarEnergyReport {
    int n = 0;
    double p = 0.0;
    double direct = 0.0;            ///< E_n^p by double sum
    std::optional<double> closed;   ///< integer p < 2n only
    double stolarsky_max = 0.0;     ///< max over T of sum_k |z - xi^k|^p
    std::string branch;
};

PlanarEnergyReport stolarsky_max(int n, Exponent p);

/// M^p_n(S^1) for 0 < p <= 1, attained by equally spaced lines.
double prop5_value(int n, double p);

/// True for p in {2, 4, ..., 2n - 2}, where every averaging-optimal configuration ties.
bool conjecture2_excluded(int n, double p);

/// Max deviation of the sorted doubled angles from the best-fitting arithmetic
/// progression of step 2 pi / n, taken mod 2 pi.
double equidistribution_residual(const PlanarConfig& lines);

struct ScanItem {
    double p = 0.0;
    bool excluded = false;
    double best = 0.0;               ///< smallest M^p found on S^1
    double equidistributed = 0.0;    ///< stolarsky_max / 2^p
    double gap = 0.0;                ///< best - equidistributed
    double residual = 0.0;
    bool consistent = false;
    std::vector<double> best_angles; ///< line angles of the best configuration
};

struct ScanReport {
    int n = 0;
    int restarts = 0;
    std::uint64_t seed = 0;
    std::vector<ScanItem> items;     ///< the scanned exponents, in grid order
    std::vector<ScanItem> excluded;  ///< even p in {2, ..., 2n-2}, not scanned
};

ScanReport conjecture2_scan(int n, const std::vector<double>& p_grid, int restarts, std::uint64_t seed);

}  // namespace polar
