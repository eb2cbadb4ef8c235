#include "polar/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "polar/asymptotics.hpp"
#include "polar/frames.hpp"
#include "polar/kernels.hpp"
#include "polar/parallel.hpp"
#include "polar/potential.hpp"
#include "polar/rng.hpp"
#include "polar/sphere_net.hpp"

namespace polar {

namespace {

constexpr double kFiniteStep = 1e-5;
constexpr double kArmijo = 1e-4;

// Orthonormal basis of the tangent space at u (d - 1 rows of length d), by Gram-Schmidt
// on the coordinate axes other than the one most aligned with u.
std::vector<double> tangent_basis(std::span<const double> u) {
    const auto d = u.size();
    std::size_t skip = 0;
    for (std::size_t j = 1; j < d; ++j)
        if (std::abs(u[j]) > std::abs(u[skip])) skip = j;
    std::vector<double> basis;
    std::vector<std::vector<double>> done{std::vector<double>(u.begin(), u.end())};
    for (std::size_t j = 0; j < d; ++j) {
        if (j == skip) continue;
        std::vector<double> e(d, 0.0);
        e[j] = 1.0;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : done) {
                const double c = dot(e, b);
                for (std::size_t r = 0; r < d; ++r) e[r] -= c * b[r];
            }
        e = normalized(e);
        done.push_back(e);
        basis.insert(basis.end(), e.begin(), e.end());
    }
    return basis;
}

// The smallest net of the automatic family with at most `cap` points.
SphereNet surrogate_net(int d, std::size_t cap) {
    if (d == 1) return sphere_net(1, 1.0);
    double delta = 0.05;
    while (delta < 1.9 && sphere_net_size(d, delta, NetKind::automatic, cap) > cap) delta *= 1.25;
    return sphere_net(d, std::min(delta, 1.9), NetKind::automatic, std::max<std::size_t>(cap, 64));
}

class Surrogate {
public:
    Surrogate(const SphereNet& net, double p, double beta) : net_(&net), p_(p), beta_(beta) {}

    // Per-vector contributions |<w, u_i>|^p at every net point w, and their sums.
    void load(const Configuration& c) {
        const std::size_t m = net_->size(), n = c.size();
        terms_.assign(n * m, 0.0);
        base_.assign(m, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t w = 0; w < m; ++w) terms_[i * m + w] = abs_pow(dot((*net_)[w], c[i]), p_);
        for (std::size_t w = 0; w < m; ++w) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += terms_[i * m + w];
            base_[w] = s;
        }
    }

    double value() const { return kernels::log_sum_exp(base_, beta_); }

    // Surrogate after replacing u_i by v.
    double replaced(std::size_t i, std::span<const double> v) const {
        const std::size_t m = net_->size();
        std::vector<double> vals(m);
        for (std::size_t w = 0; w < m; ++w) vals[w] = base_[w] - terms_[i * m + w] + abs_pow(dot((*net_)[w], v), p_);
        return kernels::log_sum_exp(vals, beta_);
    }

private:
    const SphereNet* net_;
    double p_, beta_;
    std::vector<double> terms_, base_;
};

std::vector<double> moved(std::span<const double> u, std::span<const double> dir, double t) {
    std::vector<double> v(u.begin(), u.end());
    for (std::size_t r = 0; r < v.size(); ++r) v[r] += t * dir[r];
    return normalized(v);
}

struct Start {
    std::string label;
    Configuration config;
};

std::vector<Start> starts_for(int n, int d, const SearchOptions& opts) {
    std::vector<Start> out;
    if (opts.structured.onb_copies) {
        std::vector<double> flat;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < d; ++j) flat.push_back(j == i % d ? 1.0 : 0.0);
        out.push_back({"onb_copies", Configuration(d, std::move(flat))});
    }
    if (opts.structured.untf && d >= 2 && n >= d)
        out.push_back({"untf", synthesize_untf(n, d, opts.seed).frame});
    if (opts.structured.planar_equispaced && d == 2) {
        std::vector<double> flat;
        for (int k = 0; k < n; ++k) {
            const double a = std::numbers::pi * k / n;
            flat.push_back(std::cos(a));
            flat.push_back(std::sin(a));
        }
        out.push_back({"planar_equispaced", Configuration(2, std::move(flat))});
    }
    for (int r = 0; r < opts.restarts; ++r)
        out.push_back({"random:" + std::to_string(r),
                       random_configuration(n, d, mix64(opts.seed ^ mix64(static_cast<std::uint64_t>(r) + 1)))});
    return out;
}

}  // namespace

Configuration random_configuration(int n, int d, std::uint64_t seed) {
    if (n < 1 || d < 1) throw std::invalid_argument("random_configuration: needs n >= 1 and d >= 1");
    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(n) * d);
    for (int i = 0; i < n; ++i) {
        CounterRng rng(seed, static_cast<std::uint64_t>(i));
        const auto u = random_unit_vector(rng, d);
        flat.insert(flat.end(), u.begin(), u.end());
    }
    return Configuration(d, std::move(flat));
}

SearchResult minimize_polarization(int n, int d, Exponent p, const SearchOptions& opts) {
    if (n < 1 || d < 1) throw std::invalid_argument("minimize_polarization: needs n >= 1 and d >= 1");
    if (opts.restarts < 0 || !(opts.net_delta > 0.0) || opts.smoothing < 0.0 || opts.outer_steps < 0 ||
        opts.certify_every < 1)
        throw std::invalid_argument("minimize_polarization: invalid search options");
    auto starts = starts_for(n, d, opts);
    if (starts.empty()) throw std::invalid_argument("minimize_polarization: no start enabled");

    SearchResult result;
    result.lower_bound = n * mu(d, p);
    result.beta = opts.smoothing > 0.0 ? opts.smoothing : 50.0 / n;
    const SphereNet net = surrogate_net(d, opts.surrogate_points);
    result.surrogate_size = net.size();
    double best_upper = std::numeric_limits<double>::infinity();

    for (auto& start : starts) {
        StartSummary summary{start.label, 0.0, std::numeric_limits<double>::infinity()};
        Configuration cur = start.config;
        auto certify = [&](int step) {
            MaxCertificate c = certified_max(cur, p, opts.net_delta);
            if (!c.certified) result.converged = false;
            if (step == 0) summary.initial_upper = c.upper;
            summary.final_upper = std::min(summary.final_upper, c.upper);
            if (c.upper < best_upper) {
                best_upper = c.upper;
                result.best = cur;
                result.certificate = std::move(c);
                result.start = start.label;
                result.step = step;
            }
        };
        certify(0);

        Surrogate s(net, p, result.beta);
        s.load(cur);
        double f = s.value();
        double t = 0.1;
        int step = 0;
        const int dim_t = d - 1;
        while (step < opts.outer_steps && dim_t > 0) {
            // Central differences in tangent coordinates; only term i moves with u_i.
            std::vector<std::vector<double>> bases(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) bases[i] = tangent_basis(cur[i]);
            const auto grad = parallel_map<double>(static_cast<std::size_t>(n) * dim_t, [&](std::size_t idx) {
                const std::size_t i = idx / dim_t, k = idx % dim_t;
                const std::span<const double> dir(bases[i].data() + k * d, static_cast<std::size_t>(d));
                const double up = s.replaced(i, moved(cur[i], dir, kFiniteStep));
                const double dn = s.replaced(i, moved(cur[i], dir, -kFiniteStep));
                return (up - dn) / (2.0 * kFiniteStep);
            });
            double g2 = 0.0;
            for (double g : grad) g2 += g * g;
            if (g2 == 0.0) break;

            std::vector<std::vector<double>> dirs(static_cast<std::size_t>(n), std::vector<double>(d, 0.0));
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < dim_t; ++k)
                    for (int r = 0; r < d; ++r) dirs[i][r] -= grad[i * dim_t + k] * bases[i][k * d + r];

            bool accepted = false;
            for (t = std::min(1.0, 2.0 * t); t > 1e-12; t *= 0.5) {
                std::vector<double> flat;
                for (int i = 0; i < n; ++i) {
                    const auto v = moved(cur[i], dirs[i], t);
                    flat.insert(flat.end(), v.begin(), v.end());
                }
                Configuration trial(d, std::move(flat));
                Surrogate st(net, p, result.beta);
                st.load(trial);
                const double ft = st.value();
                if (ft <= f - kArmijo * t * g2) {
                    cur = std::move(trial);
                    s = std::move(st);
                    f = ft;
                    accepted = true;
                    break;
                }
            }
            if (!accepted) break;
            ++step;
            if (step % opts.certify_every == 0) certify(step);
        }
        if (step % opts.certify_every != 0) certify(step);
        result.starts.push_back(summary);
    }
    result.gap = result.certificate.upper - result.lower_bound;
    return result;
}

namespace {

struct LocalMax {
    double phi;
    double value;
};

// Refined local maxima of phi -> sum_k |cos(phi - a_k)|^p on [0, pi).
std::vector<LocalMax> local_maxima(const std::vector<double>& lines, double p) {
    const std::size_t n = lines.size();
    auto g = [&](double phi) {
        double s = 0.0;
        for (double a : lines) s += abs_pow(std::cos(phi - a), p);
        return s;
    };
    const std::size_t m = std::max<std::size_t>(64, 32 * n);
    const double h = std::numbers::pi / static_cast<double>(m);
    std::vector<double> vals(m);
    for (std::size_t j = 0; j < m; ++j) vals[j] = g(h * static_cast<double>(j));
    std::vector<LocalMax> out;
    constexpr double kInvPhi = 0.6180339887498949;
    for (std::size_t j = 0; j < m; ++j) {
        const double prev = vals[(j + m - 1) % m], next = vals[(j + 1) % m];
        if (vals[j] < prev || vals[j] <= next) continue;
        double lo = h * (static_cast<double>(j) - 1.0), hi = h * (static_cast<double>(j) + 1.0);
        double x1 = hi - kInvPhi * (hi - lo), x2 = lo + kInvPhi * (hi - lo);
        double f1 = g(x1), f2 = g(x2);
        while (hi - lo > 1e-11) {
            if (f1 < f2) {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + kInvPhi * (hi - lo);
                f2 = g(x2);
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - kInvPhi * (hi - lo);
                f1 = g(x1);
            }
        }
        out.push_back(f1 >= f2 ? LocalMax{x1, f1} : LocalMax{x2, f2});
    }
    if (out.empty()) {
        const auto j = static_cast<std::size_t>(std::max_element(vals.begin(), vals.end()) - vals.begin());
        out.push_back({h * static_cast<double>(j), vals[j]});
    }
    return out;
}

// Soft-max over the local maxima; by the envelope theorem each maximum's gradient in the
// line angles is the partial derivative at fixed phi.
double planar_softmax(const std::vector<double>& lines, double p, double beta, std::vector<double>* grad) {
    const auto maxima = local_maxima(lines, p);
    std::vector<double> vals;
    for (const auto& m : maxima) vals.push_back(m.value);
    const double s = kernels::log_sum_exp(vals, beta);
    if (grad) {
        grad->assign(lines.size(), 0.0);
        for (const auto& m : maxima) {
            const double w = std::exp(beta * (m.value - s));
            for (std::size_t k = 0; k < lines.size(); ++k) {
                const double c = std::cos(m.phi - lines[k]);
                if (c == 0.0) continue;
                const double dc = p * std::pow(std::abs(c), p - 1.0) * (c > 0 ? 1.0 : -1.0) * std::sin(m.phi - lines[k]);
                (*grad)[k] += w * dc;
            }
        }
    }
    return s;
}

}  // namespace

double planar_polarization(const std::vector<double>& lines, double p) {
    if (lines.empty()) return 0.0;
    double best = 0.0;
    for (const auto& m : local_maxima(lines, p)) best = std::max(best, m.value);
    return best;
}

PlanarSearchResult minimize_planar(int n, Exponent p, std::uint64_t seed, int restarts, std::uint64_t stream) {
    if (n < 1) throw std::invalid_argument("minimize_planar: n must be >= 1");
    if (restarts < 1) throw std::invalid_argument("minimize_planar: restarts must be >= 1");
    const CounterRng base(seed, stream);
    const auto runs = parallel_map<PlanarSearchResult>(static_cast<std::size_t>(restarts), [&](std::size_t r) {
        CounterRng rng = base.split(r);
        std::vector<double> lines(static_cast<std::size_t>(n));
        for (double& a : lines) a = std::numbers::pi * rng.uniform();
        std::vector<double> grad;
        for (double beta = 10.0; beta <= 1e6 * 1.0001; beta *= 10.0) {
            double f = planar_softmax(lines, p, beta, &grad);
            double t = 1.0 / beta;
            for (int it = 0; it < 400; ++it) {
                double g2 = 0.0;
                for (double g : grad) g2 += g * g;
                if (g2 < 1e-28) break;
                bool accepted = false;
                for (t = std::min(1.0, 4.0 * t); t > 1e-16; t *= 0.5) {
                    std::vector<double> trial = lines;
                    for (std::size_t k = 0; k < trial.size(); ++k) trial[k] -= t * grad[k];
                    std::vector<double> tgrad;
                    const double ft = planar_softmax(trial, p, beta, &tgrad);
                    if (ft <= f - kArmijo * t * g2) {
                        lines = std::move(trial);
                        grad = std::move(tgrad);
                        f = ft;
                        accepted = true;
                        break;
                    }
                }
                if (!accepted) break;
            }
        }
        for (double& a : lines) {
            a = std::fmod(a, std::numbers::pi);
            if (a < 0.0) a += std::numbers::pi;
        }
        std::sort(lines.begin(), lines.end());
        return PlanarSearchResult{lines, planar_polarization(lines, p), static_cast<int>(r)};
    });
    const PlanarSearchResult* best = &runs.front();
    for (const auto& r : runs)
        if (r.value < best->value) best = &r;
    return *best;
}

}  // namespace polar
