#include "polar/signsum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "polar/parallel.hpp"
#include "polar/rng.hpp"

namespace polar {

namespace {

constexpr double kFlipThreshold = 1.0 - 1e-12;
constexpr double kTieTolerance = 1e-12;

struct Candidate {
    double value = -1.0;     // |z|^2
    std::uint64_t key = 0;   // bit n-1-j set when eps_j = -1; smaller key = lexicographically first
};

bool better(const Candidate& a, const Candidate& b) {
    const double tol = kTieTolerance * std::max(1.0, b.value);
    if (a.value > b.value + tol) return true;
    if (a.value < b.value - tol) return false;
    return a.key < b.key;
}

// Gray-code walk over eps_1..eps_{free} with eps_0 = +1 and the remaining signs fixed by
// `fixed_key`. Returns the best pattern of the chunk.
Candidate enumerate_chunk(const Configuration& config, int free, std::uint64_t fixed_key) {
    const int n = static_cast<int>(config.size());
    const auto d = static_cast<std::size_t>(config.dim());
    std::vector<int> eps(static_cast<std::size_t>(n));
    std::vector<double> z(d, 0.0);
    for (int j = 0; j < n; ++j) {
        eps[j] = (fixed_key >> (n - 1 - j)) & 1U ? -1 : 1;
        const auto u = config[j];
        for (std::size_t r = 0; r < d; ++r) z[r] += eps[j] * u[r];
    }
    Candidate best{dot(z, z), fixed_key};
    std::uint64_t key = fixed_key;
    const std::uint64_t count = std::uint64_t{1} << free;
    for (std::uint64_t g = 1; g < count; ++g) {
        const int j = std::countr_zero(g) + 1;
        const auto u = config[j];
        const double s = -2.0 * eps[j];
        for (std::size_t r = 0; r < d; ++r) z[r] += s * u[r];
        eps[j] = -eps[j];
        key ^= std::uint64_t{1} << (n - 1 - j);
        const Candidate c{dot(z, z), key};
        if (better(c, best)) best = c;
    }
    return best;
}

std::vector<double> signed_sum(const Configuration& config, const std::vector<int>& signs) {
    std::vector<double> z(static_cast<std::size_t>(config.dim()), 0.0);
    for (std::size_t i = 0; i < config.size(); ++i) {
        const auto u = config[i];
        for (std::size_t r = 0; r < z.size(); ++r) z[r] += signs[i] * u[r];
    }
    return z;
}

// Hill climb from `signs` in place; z tracks the signed sum.
void bang_climb(const Configuration& config, std::vector<int>& signs) {
    const std::size_t n = config.size();
    for (;;) {
        std::vector<double> z = signed_sum(config, signs);
        bool flipped_any = false;
        for (;;) {
            std::size_t worst = n;
            double margin = kFlipThreshold;
            for (std::size_t k = 0; k < n; ++k) {
                const double m = signs[k] * dot(config[k], z);
                if (m < margin) {
                    margin = m;
                    worst = k;
                }
            }
            if (worst == n) break;
            const auto u = config[worst];
            for (std::size_t r = 0; r < z.size(); ++r) z[r] -= 2.0 * signs[worst] * u[r];
            signs[worst] = -signs[worst];
            flipped_any = true;
        }
        // Confirm on a freshly summed z so incremental drift cannot fake a Bang point.
        if (!flipped_any) return;
    }
}

void canonicalize(std::vector<int>& signs) {
    if (!signs.empty() && signs.front() < 0)
        for (int& s : signs) s = -s;
}

}  // namespace

std::string to_string(SignSumStatus s) { return s == SignSumStatus::exact ? "exact" : "bang_certified"; }

SignSumResult evaluate_signs(const Configuration& config, std::vector<int> signs, SignSumStatus status) {
    if (signs.size() != config.size()) throw std::invalid_argument("evaluate_signs: one sign per vector required");
    SignSumResult r;
    const std::vector<double> z = signed_sum(config, signs);
    r.norm = norm(z);
    r.bang_margin = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < config.size(); ++k) r.bang_margin = std::min(r.bang_margin, signs[k] * dot(config[k], z));
    r.signs = std::move(signs);
    r.status = status;
    return r;
}

SignSumResult max_sign_sum_exact(const Configuration& config) {
    const int n = static_cast<int>(config.size());
    if (n < 1) throw std::invalid_argument("max_sign_sum_exact: empty configuration");
    if (n > kMaxEnumeration) throw BudgetExceeded("max_sign_sum_exact: n exceeds the enumeration budget of 30");

    const int top = std::min(n - 1, 8);
    const int free = n - 1 - top;
    const auto chunks = parallel_map<Candidate>(std::size_t{1} << top, [&](std::size_t c) {
        return enumerate_chunk(config, free, static_cast<std::uint64_t>(c));
    });
    Candidate best = chunks.front();
    for (const Candidate& c : chunks)
        if (better(c, best)) best = c;

    std::vector<int> signs(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) signs[j] = (best.key >> (n - 1 - j)) & 1U ? -1 : 1;
    return evaluate_signs(config, std::move(signs), SignSumStatus::exact);
}

SignSumResult max_sign_sum_local(const Configuration& config, std::uint64_t seed, int starts) {
    if (config.size() == 0) throw std::invalid_argument("max_sign_sum_local: empty configuration");
    if (starts < 1) throw std::invalid_argument("max_sign_sum_local: need at least one start");
    const auto runs = parallel_map<SignSumResult>(static_cast<std::size_t>(starts), [&](std::size_t s) {
        CounterRng rng(seed, s);
        std::vector<int> signs(config.size());
        for (int& e : signs) e = rng() >> 63 ? -1 : 1;
        bang_climb(config, signs);
        canonicalize(signs);
        return evaluate_signs(config, std::move(signs), SignSumStatus::bang_certified);
    });
    const SignSumResult* best = &runs.front();
    for (const auto& r : runs)
        if (r.norm > best->norm) best = &r;
    return *best;
}

Prop3Check prop3_crosscheck(const Configuration& config, double delta) {
    Prop3Check out;
    out.sign_norm = max_sign_sum_exact(config).norm;
    out.enclosure = certified_max(config, Exponent(1.0), delta);
    out.consistent = out.enclosure.lower - 1e-9 <= out.sign_norm && out.sign_norm <= out.enclosure.upper + 1e-9;
    return out;
}

Configuration simplex_union_onb(int d, std::optional<int> h_opt) {
    if (d < 1) throw std::invalid_argument("simplex_union_onb: d must be >= 1");
    const int h = h_opt.value_or(d % 2 == 0 ? d : d - 1);
    if (h < 2 || h > d || h % 2 != 0)
        throw std::invalid_argument("simplex_union_onb: needs an even simplex dimension h in [2, d]; d = " +
                                    std::to_string(d) + ", h = " + std::to_string(h));
    // Vertex i has coordinates b_k[i] / sqrt(h / (h+1)) in the Helmert basis b_1..b_h of
    // the sum-zero hyperplane of R^{h+1}.
    const double scale = std::sqrt((h + 1.0) / h);
    std::vector<std::vector<double>> rows;
    for (int i = 0; i <= h; ++i) {
        std::vector<double> row(static_cast<std::size_t>(d), 0.0);
        for (int k = 1; k <= h; ++k) {
            const double b = i < k ? 1.0 : (i == k ? -static_cast<double>(k) : 0.0);
            row[k - 1] = scale * b / std::sqrt(k * (k + 1.0));
        }
        rows.push_back(std::move(row));
    }
    for (int j = h; j < d; ++j) {
        rows.emplace_back(static_cast<std::size_t>(d), 0.0);
        rows.back()[j] = 1.0;
    }
    return Configuration::from_directions(d, rows);
}

ConjectureReport conjecture1_harness(int d, int trials, std::uint64_t seed) {
    if (d < 1 || d > 12) throw std::invalid_argument("conjecture1_harness: d must be in [1, 12]");
    if (trials < 1) throw std::invalid_argument("conjecture1_harness: trials must be positive");
    ConjectureReport r;
    r.d = d;
    r.trials = trials;
    r.seed = seed;
    r.sharp_value = std::sqrt(d + 2.0);
    const double floor = r.sharp_value - 1e-9;

    const auto norms = parallel_map<double>(static_cast<std::size_t>(trials), [&](std::size_t t) {
        CounterRng rng(seed, t);
        std::vector<double> flat;
        for (int i = 0; i <= d; ++i) {
            const auto u = random_unit_vector(rng, d);
            flat.insert(flat.end(), u.begin(), u.end());
        }
        return max_sign_sum_exact(Configuration(d, std::move(flat))).norm;
    });
    r.min_over_trials = *std::min_element(norms.begin(), norms.end());
    r.violations = static_cast<int>(std::count_if(norms.begin(), norms.end(), [&](double v) { return v < floor; }));

    for (int h = 2; h <= d; h += 2) {
        const double v = max_sign_sum_exact(simplex_union_onb(d, h)).norm;
        r.constructions.push_back({h, v, std::abs(v - r.sharp_value) <= 1e-9});
    }
    if (!r.constructions.empty()) r.simplex_attains = r.constructions.back().attains;
    return r;
}

}  // namespace polar
