#include "polar/potential.hpp"

namespace polar {

namespace {

constexpr double kStepGain = 1e-13;
constexpr int kMaxSteps = 10'000;
constexpr double kKinkTolerance = 1e-9;
constexpr double kKinkStep = 1e-6;

// sum_i sgn<v,u_i> |<v,u_i>|^{p-1} u_i; exact zeros contribute nothing.
std::vector<double> ascent_direction(const Configuration& config, std::span<const double> v, double p) {
    std::vector<double> g(static_cast<std::size_t>(config.dim()), 0.0);
    for (std::size_t i = 0; i < config.size(); ++i) {
        const auto u = config[i];
        const double x = dot(v, u);
        if (x == 0.0) continue;
        const double w = (x > 0 ? 1.0 : -1.0) * (p == 1.0 ? 1.0 : abs_pow(x, p - 1.0));
        for (std::size_t k = 0; k < g.size(); ++k) g[k] += w * u[k];
    }
    return g;
}

std::vector<double> blend(std::span<const double> v, std::span<const double> w, double t) {
    std::vector<double> out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k] + t * (w[k] - v[k]);
    return out;
}

}  // namespace

double potential(const Configuration& config, std::span<const double> v, Exponent p) {
    require_unit(v, static_cast<std::size_t>(config.dim()), "potential");
    return potential_unchecked(config, v, p);
}

RefineResult local_refine(const Configuration& config, Exponent exponent, std::span<const double> v0) {
    require_unit(v0, static_cast<std::size_t>(config.dim()), "local_refine");
    const double p = exponent;
    RefineResult r;
    r.direction.assign(v0.begin(), v0.end());
    r.value = potential_unchecked(config, r.direction, p);

    for (int step = 0; step < kMaxSteps; ++step) {
        r.steps = step;
        const std::vector<double> g = ascent_direction(config, r.direction, p);
        const double gn = norm(g);
        if (!(gn > 0.0)) {
            r.stalled = step == 0;
            break;
        }
        std::vector<double> cand = normalized(g);
        double fc = potential_unchecked(config, cand, p);
        // The fixed-point step is monotone for p >= 1 (convexity); below that, damp it.
        for (int h = 0; h < 40 && fc <= r.value && p < 1.0; ++h) {
            const double t = std::ldexp(1.0, -(h + 1));
            const auto b = blend(r.direction, cand, t);
            const double nb = norm(b);
            if (!(nb > 0.0)) continue;
            auto c2 = normalized(b);
            const double f2 = potential_unchecked(config, c2, p);
            if (f2 > r.value) {
                cand = std::move(c2);
                fc = f2;
            }
        }
        if (fc - r.value >= kStepGain) {
            r.direction = std::move(cand);
            r.value = fc;
            continue;
        }
        if (fc > r.value) {
            r.direction = std::move(cand);
            r.value = fc;
        }
        if (p > 1.0) break;
        // Kink escape: a maximizer never sits where some <v,u_i> vanishes.
        bool moved = false;
        std::vector<double> best_dir;
        double best_val = r.value;
        for (std::size_t i = 0; i < config.size(); ++i) {
            if (std::abs(dot(r.direction, config[i])) > kKinkTolerance) continue;
            for (double s : {1.0, -1.0}) {
                std::vector<double> t(r.direction);
                for (std::size_t k = 0; k < t.size(); ++k) t[k] += s * kKinkStep * config[i][k];
                auto tn = normalized(t);
                const double ft = potential_unchecked(config, tn, p);
                if (ft > best_val + kStepGain) {
                    best_val = ft;
                    best_dir = std::move(tn);
                    moved = true;
                }
            }
        }
        if (!moved) break;
        r.direction = std::move(best_dir);
        r.value = best_val;
    }
    return r;
}

}  // namespace polar
