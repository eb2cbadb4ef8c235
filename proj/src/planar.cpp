#include "polar/planar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "polar/kernels.hpp"
#include "polar/parallel.hpp"
#include "polar/search.hpp"

namespace polar {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double binomial(int n, int k) {
    double c = 1.0;
    for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
    return c;
}

bool is_integer(double p) { return std::floor(p) == p; }

}  // namespace

double wrap_angle(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r >= kTwoPi ? 0.0 : r;
}

double chord(double a, double b) { return 2.0 * std::abs(std::sin((a - b) / 2.0)); }

PlanarConfig::PlanarConfig(std::vector<double> angles) : angles_(std::move(angles)) {
    for (double& a : angles_) {
        if (!std::isfinite(a)) throw std::invalid_argument("PlanarConfig: angles must be finite");
        a = wrap_angle(a);
    }
    std::sort(angles_.begin(), angles_.end());
}

PlanarConfig PlanarConfig::from_configuration(const Configuration& config) {
    if (config.dim() != 2) throw std::invalid_argument("PlanarConfig: configuration must live in R^2");
    std::vector<double> a;
    for (std::size_t i = 0; i < config.size(); ++i) a.push_back(std::atan2(config[i][1], config[i][0]));
    return PlanarConfig(std::move(a));
}

Configuration PlanarConfig::to_configuration() const {
    std::vector<double> flat;
    for (double a : angles_) {
        flat.push_back(std::cos(a));
        flat.push_back(std::sin(a));
    }
    return Configuration(2, std::move(flat));
}

SquaredMap squared_map(const PlanarConfig& config, double v_angle) {
    std::vector<double> doubled;
    for (double a : config.angles()) doubled.push_back(2.0 * a);
    return {PlanarConfig(std::move(doubled)), wrap_angle(2.0 * v_angle + std::numbers::pi)};
}

PlanarConfig equidistributed(int n) {
    if (n < 1) throw std::invalid_argument("equidistributed: n must be >= 1");
    std::vector<double> a;
    for (int k = 0; k < n; ++k) a.push_back(kTwoPi * k / n);
    return PlanarConfig(std::move(a));
}

double riesz_energy(const PlanarConfig& config, double p) {
    const auto& a = config.angles();
    double s = 0.0;
    for (double x : a)
        for (double y : a) s += std::pow(chord(x, y), p);
    return s;
}

double riesz_energy_closed(int n, int p) {
    if (n < 1 || p < 1 || p >= 2 * n)
        throw std::invalid_argument("riesz_energy_closed: needs integer 0 < p < 2n");
    const double nn = n;
    if (p % 2 == 0) return nn * nn * binomial(p, p / 2);
    double s = 0.0;
    for (int k = 0; k <= p; ++k) {
        const double sign = k % 2 == 0 ? 1.0 : -1.0;
        s += binomial(p, k) * sign / std::tan((p / 2.0 - k) * std::numbers::pi / nn);
    }
    return nn * (((p - 1) / 2) % 2 == 0 ? 1.0 : -1.0) * s;
}

double equidistributed_energy(int n, double p) {
    if (is_integer(p) && p >= 1.0 && p < 2.0 * n) return riesz_energy_closed(n, static_cast<int>(p));
    return riesz_energy(equidistributed(n), p);
}

double torus_potential(const PlanarConfig& config, double psi, double p) {
    double s = 0.0;
    for (double a : config.angles()) s += std::pow(chord(psi, a), p);
    return s;
}

TorusMax torus_grid_max(const PlanarConfig& config, double p, std::size_t points_per_vector) {
    const std::size_t m = points_per_vector * std::max<std::size_t>(config.size(), 1);
    const auto best = kernels::parallel::torus_grid_max(config.angles(), p, m);
    return {best.value, kTwoPi * static_cast<double>(best.index) / static_cast<double>(m), m};
}

PlanarEnergyReport stolarsky_max(int n, Exponent p) {
    if (n < 1) throw std::invalid_argument("stolarsky_max: n must be >= 1");
    PlanarEnergyReport r;
    r.n = n;
    r.p = p;
    r.direct = riesz_energy(equidistributed(n), p);
    if (is_integer(p) && p < 2.0 * n) r.closed = riesz_energy_closed(n, static_cast<int>(p.value()));

    const double en = equidistributed_energy(n, p) / n;
    const double midpoint = equidistributed_energy(2 * n, p) / (2.0 * n) - en;
    if (p < 2.0 * n) {
        const auto m = static_cast<long long>(std::floor(p / 2.0));
        const bool odd = m % 2 == 1;
        r.stolarsky_max = odd ? en : midpoint;
        r.branch = std::string("p < 2n, floor(p/2) ") + (odd ? "odd: base point" : "even: midpoint");
    } else {
        const bool even = n % 2 == 0;
        r.stolarsky_max = even ? en : midpoint;
        r.branch = std::string("p >= 2n, n ") + (even ? "even: base point" : "odd: midpoint");
    }
    return r;
}

double prop5_value(int n, double p) {
    if (n < 1) throw std::invalid_argument("prop5_value: n must be >= 1");
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("prop5_value: needs 0 < p <= 1");
    const double shift = n % 2 == 0 ? std::numbers::pi / (2.0 * n) : 0.0;
    double s = 0.0;
    for (int k = 1; k <= n; ++k) s += std::pow(std::abs(std::cos(k * std::numbers::pi / n - shift)), p);
    return s;
}

bool conjecture2_excluded(int n, double p) {
    return is_integer(p) && p >= 2.0 && p <= 2.0 * n - 2.0 && static_cast<long long>(p) % 2 == 0;
}

double equidistribution_residual(const PlanarConfig& lines) {
    const std::size_t n = lines.size();
    if (n <= 1) return 0.0;
    std::vector<double> doubled;
    for (double a : lines.angles()) doubled.push_back(wrap_angle(2.0 * a));
    std::sort(doubled.begin(), doubled.end());
    // Deviation of each point from the progression anchored at the first one, wrapped
    // to (-pi, pi]; the best offset halves the spread.
    double lo = 0.0, hi = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        double dev = doubled[k] - doubled[0] - kTwoPi * static_cast<double>(k) / static_cast<double>(n);
        dev = std::remainder(dev, kTwoPi);
        lo = std::min(lo, dev);
        hi = std::max(hi, dev);
    }
    return (hi - lo) / 2.0;
}

ScanReport conjecture2_scan(int n, const std::vector<double>& p_grid, int restarts, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("conjecture2_scan: n must be >= 1");
    if (restarts < 1) throw std::invalid_argument("conjecture2_scan: restarts must be >= 1");
    ScanReport report;
    report.n = n;
    report.restarts = restarts;
    report.seed = seed;
    for (std::size_t k = 0; k < p_grid.size(); ++k) {
        const double p = p_grid[k];
        ScanItem item;
        item.p = p;
        item.equidistributed = stolarsky_max(n, Exponent(p)).stolarsky_max / std::pow(2.0, p);
        if (conjecture2_excluded(n, p)) {
            item.excluded = true;
            report.excluded.push_back(item);
            continue;
        }
        const PlanarSearchResult best = minimize_planar(n, Exponent(p), seed, restarts, k);
        item.best = best.value;
        item.best_angles = best.lines;
        item.gap = item.best - item.equidistributed;
        item.residual = equidistribution_residual(PlanarConfig(best.lines));
        item.consistent = item.gap >= -1e-6 && item.residual <= 1e-4;
        report.items.push_back(std::move(item));
    }
    return report;
}

}  // namespace polar
