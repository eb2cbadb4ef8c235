#include "polar/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polar {

namespace {

// B_{2k} / (2k (2k-1)), k = 1..7.
constexpr double kStirling[] = {1.0 / 12.0,   -1.0 / 360.0,          1.0 / 1260.0, -1.0 / 1680.0,
                                1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0};
constexpr double kStirlingFrom = 20.0;

double stirling_tail(double z) {
    const double z2 = 1.0 / (z * z);
    double term = 1.0 / z, s = 0.0;
    for (double c : kStirling) {
        s += c * term;
        term *= z2;
    }
    return s;
}

}  // namespace

double log_gamma_ratio(double x, double a) {
    if (!(x > 0.0) || !(a >= 0.0)) throw std::invalid_argument("log_gamma_ratio: need x > 0, a >= 0");
    if (a == 0.0) return 0.0;
    double shift = 0.0;
    while (x < kStirlingFrom) {
        shift += std::log1p(a / x);
        x += 1.0;
    }
    const double y = x + a;
    return (x - 0.5) * std::log1p(a / x) + a * std::log(y) - a + (stirling_tail(y) - stirling_tail(x)) - shift;
}

double log_mu(int d, double p) {
    if (d < 1) throw std::invalid_argument("mu: dimension must be >= 1");
    if (!(p > 0.0)) throw std::invalid_argument("mu: exponent must be positive");
    return std::lgamma((p + 1.0) / 2.0) - log_gamma_ratio(d / 2.0, p / 2.0) - 0.5 * std::log(std::numbers::pi);
}

double mu(int d, Exponent p) {
    if (d == 1) return 1.0;
    return std::exp(log_mu(d, p));
}

double mu_tilde(Exponent p) {
    const double h = p.value() / 2.0 + 1.0;
    return std::exp(log_gamma_ratio(h, p.value() / 2.0) - std::lgamma(h));
}

double weighted_coordinate_max(const std::vector<int>& multiplicity, double p) {
    if (multiplicity.empty()) throw std::invalid_argument("weighted_coordinate_max: empty multiplicities");
    const int top = *std::max_element(multiplicity.begin(), multiplicity.end());
    // For p >= 2 the objective is convex in w_j = v_j^2 over the simplex: a vertex wins.
    if (p >= 2.0) return static_cast<double>(top);
    // Otherwise it is strictly concave in w; the stationary point w_j ~ c_j^{q} with
    // q = 2 / (2 - p) gives the value (sum_j c_j^q)^{1/q}.
    const double q = 2.0 / (2.0 - p);
    double s = 0.0;
    for (int c : multiplicity)
        if (c > 0) s += std::pow(static_cast<double>(c) / top, q);
    return top * std::pow(s, 1.0 / q);
}

BoundsReport theorem1_bounds(int n, int d, Exponent p) {
    if (d < 1) throw std::invalid_argument("theorem1_bounds: d must be >= 1");
    if (n < d) throw std::invalid_argument("theorem1_bounds: requires n >= d");
    BoundsReport r;
    r.n = n;
    r.d = d;
    r.p = p;
    r.copies = (n + d - 1) / d;
    r.last_copy = n - (r.copies - 1) * d;
    r.lower = n * mu(d, p);

    std::vector<int> mult(static_cast<std::size_t>(d), r.copies - 1);
    for (int j = 0; j < r.last_copy; ++j) mult[static_cast<std::size_t>(j)] = r.copies;
    r.upper = weighted_coordinate_max(mult, p);

    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(n) * d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) flat.push_back(j == i % d ? 1.0 : 0.0);
    r.construction = Configuration(d, std::move(flat));

    r.c_bound = std::pow(2.0, p.value() / 2.0);
    r.normalized_upper = r.upper / (n * std::pow(static_cast<double>(d), -p.value() / 2.0));
    r.truncation = r.last_copy == d ? "none"
                                    : "last basis copy truncated to its first " + std::to_string(r.last_copy) +
                                          " vectors";
    return r;
}

Configuration doubling_construction(const Configuration& base) {
    const auto d = static_cast<std::size_t>(base.dim());
    std::vector<double> flat;
    flat.reserve(base.size() * 4 * d);
    for (int half = 0; half < 2; ++half)
        for (std::size_t i = 0; i < base.size(); ++i) {
            const auto u = base[i];
            for (std::size_t k = 0; k < 2 * d; ++k) {
                const bool inside = half == 0 ? k < d : k >= d;
                flat.push_back(inside ? u[half == 0 ? k : k - d] : 0.0);
            }
        }
    return Configuration(base.dim() * 2, std::move(flat));
}

}  // namespace polar
