#include "polar/certify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "polar/frames.hpp"
#include "polar/kernels.hpp"
#include "polar/parallel.hpp"
#include "polar/potential.hpp"

namespace polar {

namespace {

// Absorbs rounding in the per-cell bounds (a few ulps per term).
constexpr double kBoundSlackPerTerm = 1e-13;
constexpr int kMaxLevel = 60;
constexpr std::size_t kInitialCells = 256;

struct CellEval {
    double value = 0.0;  // potential at the cell centre
    double bound = 0.0;  // upper bound for the cell (see evaluate)
    double chord = 0.0;  // covering radius of the cell, Euclidean
};

// Cells of the cube-sphere hierarchy: a face of [-1,1]^d (axis, sign) and a dyadic box
// of level L inside it, given by d-1 integer coordinates in [0, 2^L).
class CubeCells {
public:
    CubeCells(const Configuration& config, double p) : config_(config), p_(p), d_(config.dim()) {}

    int dim() const { return d_; }

    // Unnormalized centre of the cell (on the cube surface).
    void centre(std::uint32_t face, const std::uint64_t* idx, int level, double* y) const {
        const int axis = static_cast<int>(face / 2);
        const double h = std::ldexp(1.0, -level);
        int t = 0;
        for (int r = 0; r < d_; ++r) {
            if (r == axis) {
                y[r] = (face % 2 == 0) ? 1.0 : -1.0;
            } else {
                y[r] = -1.0 + (2.0 * static_cast<double>(idx[t]) + 1.0) * h;
                ++t;
            }
        }
    }

    std::vector<double> unit_centre(std::uint32_t face, const std::uint64_t* idx, int level) const {
        std::vector<double> y(static_cast<std::size_t>(d_));
        centre(face, idx, level, y.data());
        return normalized(y);
    }

    // Upper bounds on U^p over the cap spanned by the cell. The cap has angular radius
    // rho; per term, theta_i is the angle between the centre and the nearer of +-u_i.
    //  * Lipschitz/Hölder: f(c) + modulus(chord).
    //  * Cap maxima: sum_i cos(max(0, theta_i - rho))^p.
    //  * Second order along geodesics: terms whose sign cannot change inside the cap
    //    are C^2 there (concave for p <= 1), so f_T(c) + rho |grad_T f_T(c)| + rho^2 K / 2
    //    bounds them; the remaining terms use their cap maxima.
    //  * p = 2: f(cos t c + sin t w) = f(c) cos^2 t + f(w) sin^2 t + sin 2t <w, Ac> with
    //    f(w) <= M, which gives M <= f(c) + |grad_T f(c)| tan(rho) whenever the cell
    //    holds a global maximizer. That is all pruning and the final upper need.
    CellEval evaluate(std::uint32_t face, const std::uint64_t* idx, int level) const {
        thread_local std::vector<double> c, g_taylor;
        const auto du = static_cast<std::size_t>(d_);
        c.resize(du);
        g_taylor.assign(du, 0.0);
        centre(face, idx, level, c.data());

        const double h = std::ldexp(1.0, -level);
        const int axis = static_cast<int>(face / 2);
        double a = 0.0, spread = 0.0;
        for (int r = 0; r < d_; ++r) {
            a += c[r] * c[r];
            if (r != axis) spread += std::abs(c[r]);
        }
        // Smallest cosine between the centre and a box vertex, as a function of
        // tau = <c', sigma>, minimized over tau in [-spread, spread].
        const double tau = std::max(-h * (d_ - 1), -spread);
        const double kk = h * h * (d_ - 1);
        double cos_rho = (a + h * tau) / (std::sqrt(a) * std::sqrt(a + 2.0 * h * tau + kk));
        cos_rho = std::clamp(cos_rho, -1.0, 1.0);
        const double sin_rho = std::sqrt((1.0 - cos_rho) * (1.0 + cos_rho));
        const double rho = std::acos(cos_rho);

        const double len = std::sqrt(a);
        for (double& v : c) v /= len;

        const double p = p_;
        const std::size_t n = config_.size();
        double f = 0.0, f_taylor = 0.0, cap_sum = 0.0, cross_sum = 0.0, curvature = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const auto u = config_[i];
            const double x = dot(c, u);
            const double ax = std::min(std::abs(x), 1.0);
            const double sin_theta = std::sqrt((1.0 - ax) * (1.0 + ax));
            const double term = abs_pow(ax, p);
            f += term;
            const double cap = ax >= cos_rho ? 1.0 : abs_pow(ax * cos_rho + sin_theta * sin_rho, p);
            cap_sum += cap;
            const double min_abs = ax * cos_rho - sin_theta * sin_rho;  // cos(theta + rho)
            const bool crossing = p < 2.0 && (cos_rho <= 0.0 || min_abs <= 0.0);
            if (crossing) {
                cross_sum += cap;
                continue;
            }
            f_taylor += term;
            if (x != 0.0) {
                const double w = (x > 0 ? 1.0 : -1.0) * p * (p == 1.0 ? 1.0 : abs_pow(ax, p - 1.0));
                for (std::size_t k = 0; k < du; ++k) g_taylor[k] += w * u[k];
            }
            if (p >= 2.0)
                curvature += p * (p - 1.0);
            else if (p > 1.0)
                curvature += p * (p - 1.0) * std::pow(min_abs, p - 2.0);
        }

        const double chord = std::sqrt(2.0 - 2.0 * cos_rho);
        double bound = std::min(f + continuity_modulus(n, p, chord), cap_sum);
        if (cos_rho > 0.0) {
            const double taylor = f_taylor + rho * tangential_norm(g_taylor, c) + 0.5 * rho * rho * curvature + cross_sum;
            bound = std::min(bound, taylor);
        }
        bound += kBoundSlackPerTerm * static_cast<double>(n + 1);
        return {f, bound, chord};
    }

private:
    static double tangential_norm(const std::vector<double>& g, const std::vector<double>& c) {
        const double along = dot(g, c);
        double s = 0.0;
        for (std::size_t k = 0; k < g.size(); ++k) {
            const double t = g[k] - along * c[k];
            s += t * t;
        }
        return std::sqrt(s);
    }

    const Configuration& config_;
    double p_;
    int d_;
};

struct Frontier {
    int level = 0;
    std::vector<std::uint32_t> faces;
    std::vector<std::uint64_t> idx;  // (d-1) per cell
    std::size_t size() const { return faces.size(); }
};

Frontier initial_frontier(int d) {
    const auto m = static_cast<std::size_t>(d - 1);
    int level = 0;
    while (level < 20 && 2.0 * d * std::ldexp(1.0, static_cast<int>(m) * level) < static_cast<double>(kInitialCells))
        ++level;
    Frontier f;
    f.level = level;
    const std::uint64_t side = std::uint64_t{1} << level;
    std::vector<std::uint64_t> cur(m, 0);
    for (std::uint32_t face = 0; face < static_cast<std::uint32_t>(2 * d); ++face) {
        std::fill(cur.begin(), cur.end(), 0);
        for (;;) {
            f.faces.push_back(face);
            f.idx.insert(f.idx.end(), cur.begin(), cur.end());
            std::size_t pos = 0;
            while (pos < m && ++cur[pos] == side) cur[pos++] = 0;
            if (pos == m) break;
        }
    }
    return f;
}

MaxCertificate certify_s0(const Configuration& config, double p, double delta) {
    // S^0 = {+1, -1}; every term is |u_i|^p = 1.
    MaxCertificate cert;
    const std::vector<double> plus{1.0}, minus{-1.0};
    const double fp = potential_unchecked(config, plus, p);
    const double fm = potential_unchecked(config, minus, p);
    cert.lower = cert.upper = std::max(fp, fm);
    cert.witness = fp >= fm ? plus : minus;
    cert.modulus = continuity_modulus(config.size(), p, delta);
    cert.net_delta = delta;
    cert.construction = "s0";
    cert.cells = 2;
    return cert;
}

// At p = 2 the maximum is the top eigenvalue of the frame operator. After Jacobi
// rotations A ~ D + E, so by Weyl lambda_max <= max D + |E|_F, plus rounding.
MaxCertificate certify_p2(const Configuration& config, double delta) {
    const FrameOperator a = frame_operator(config);
    const SymmetricEigen eig = jacobi_eigen(a.entries, a.dim);
    const auto n = static_cast<double>(config.size());
    const double rounding = std::max(1e-13 * (n + 1.0), 64.0 * std::numeric_limits<double>::epsilon() * n * a.dim);
    MaxCertificate cert;
    cert.witness = normalized(std::span<const double>(eig.vectors.data(), static_cast<std::size_t>(a.dim)));
    cert.lower = potential_unchecked(config, cert.witness, 2.0);
    cert.upper = std::max(cert.lower, eig.values.front() + eig.off_diagonal + rounding);
    cert.modulus = continuity_modulus(config.size(), 2.0, delta);
    cert.net_delta = delta;
    cert.construction = "frame_eigenvalue";
    cert.cells = 1;
    return cert;
}

}  // namespace

double continuity_modulus(std::size_t n, double p, double delta) {
    const auto nn = static_cast<double>(n);
    return p >= 1.0 ? nn * p * delta : nn * std::pow(delta, p);
}

double delta_for_modulus(std::size_t n, double p, double gap) {
    const auto nn = static_cast<double>(std::max<std::size_t>(n, 1));
    return p >= 1.0 ? gap / (nn * p) : std::pow(gap / nn, 1.0 / p);
}

MaxCertificate certified_max(const Configuration& config, Exponent exponent, double delta, CertifyOptions opts) {
    if (!(delta > 0.0)) throw std::invalid_argument("certified_max: delta must be positive");
    const double p = exponent;
    const int d = config.dim();
    if (d == 1) {
        auto cert = certify_s0(config, p, delta);
        cert.underdetermined = config.underdetermined();
        return cert;
    }
    if (p == 2.0 && config.size() > 0) {
        auto cert = certify_p2(config, delta);
        cert.underdetermined = config.underdetermined();
        return cert;
    }
    const auto m = static_cast<std::size_t>(d - 1);
    const CubeCells cells(config, p);
    const double modulus = continuity_modulus(config.size(), p, delta);

    MaxCertificate cert;
    cert.modulus = modulus;
    cert.net_delta = delta;
    cert.construction = "cube_branch_and_bound";
    cert.underdetermined = config.underdetermined();
    cert.lower = -std::numeric_limits<double>::infinity();

    double settled_upper = -std::numeric_limits<double>::infinity();
    double best_centre_seen = -std::numeric_limits<double>::infinity();
    Frontier frontier = initial_frontier(d);

    while (frontier.size() > 0) {
        if (cert.cells + frontier.size() > opts.budget) {
            // Every term is at most 1.
            settled_upper = std::max(settled_upper, static_cast<double>(config.size()));
            cert.certified = false;
            break;
        }
        const auto evals = parallel_map<CellEval>(frontier.size(), [&](std::size_t j) {
            return cells.evaluate(frontier.faces[j], frontier.idx.data() + j * m, frontier.level);
        });
        cert.cells += frontier.size();

        std::size_t best = 0;
        for (std::size_t j = 1; j < evals.size(); ++j)
            if (evals[j].value > evals[best].value) best = j;
        if (evals[best].value > best_centre_seen) {
            best_centre_seen = evals[best].value;
            const auto start = cells.unit_centre(frontier.faces[best], frontier.idx.data() + best * m, frontier.level);
            const RefineResult r = local_refine(config, exponent, start);
            if (r.value > cert.lower) {
                cert.lower = r.value;
                cert.witness = r.direction;
            }
        }

        Frontier next;
        next.level = frontier.level + 1;
        double pending = -std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < frontier.size(); ++j) {
            const CellEval& e = evals[j];
            if (e.bound <= cert.lower + modulus || e.chord <= delta || frontier.level >= kMaxLevel) {
                settled_upper = std::max(settled_upper, e.bound);
                continue;
            }
            pending = std::max(pending, e.bound);
            const std::uint64_t* parent = frontier.idx.data() + j * m;
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
                next.faces.push_back(frontier.faces[j]);
                for (std::size_t r = 0; r < m; ++r) next.idx.push_back(2 * parent[r] + ((bits >> r) & 1U));
            }
        }
        if (next.size() > 0 && cert.cells + next.size() > opts.budget) {
            settled_upper = std::max(settled_upper, pending);
            cert.certified = false;
            break;
        }
        frontier = std::move(next);
    }
    if (cert.witness.empty()) {
        cert.witness.assign(static_cast<std::size_t>(d), 0.0);
        cert.witness[0] = 1.0;
        cert.lower = potential_unchecked(config, cert.witness, p);
    }
    cert.upper = std::max(settled_upper, cert.lower);
    return cert;
}

MaxCertificate certified_max_flat(const Configuration& config, Exponent exponent, double delta, bool parallel,
                                  std::size_t budget) {
    const double p = exponent;
    const SphereNet net = sphere_net(config.dim(), delta, NetKind::automatic, budget);
    const kernels::ArgMax best = parallel ? kernels::parallel::potential_argmax(config, p, net.points)
                                          : kernels::serial::potential_argmax(config, p, net.points);
    MaxCertificate cert;
    cert.modulus = continuity_modulus(config.size(), p, delta);
    cert.net_delta = delta;
    cert.construction = to_string(net.kind);
    cert.underdetermined = config.underdetermined();
    cert.cells = net.size();
    const RefineResult r = local_refine(config, exponent, net[best.index]);
    cert.lower = r.value;
    cert.witness = r.direction;
    cert.upper = std::max(best.value + cert.modulus, cert.lower);
    return cert;
}

}  // namespace polar
