#include "polar/frames.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "polar/rng.hpp"

namespace polar {

namespace {

double off_diagonal_norm(const std::vector<double>& a, int d) {
    double s = 0.0;
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            if (r != c) s += a[r * d + c] * a[r * d + c];
    return std::sqrt(s);
}

FrameOperator accumulate(const Configuration& config) {
    const int d = config.dim();
    FrameOperator A{d, std::vector<double>(static_cast<std::size_t>(d) * d, 0.0)};
    for (std::size_t i = 0; i < config.size(); ++i) {
        const auto u = config[i];
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) A.entries[r * d + c] += u[r] * u[c];
    }
    return A;
}

double residual_of(const FrameOperator& A, double n) {
    const int d = A.dim;
    const double target = n / d;
    double worst = 0.0;
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) worst = std::max(worst, std::abs(A(r, c) - (r == c ? target : 0.0)));
    return worst;
}

// ||A - (n/d) I||_F^2. On the product of spheres this differs from the frame potential
// by the constant n^2/d, but it does not lose digits to that cancellation.
double merit(const FrameOperator& A, double n) {
    const int d = A.dim;
    double s = 0.0;
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            const double e = A(r, c) - (r == c ? n / d : 0.0);
            s += e * e;
        }
    return s;
}

}  // namespace

double FrameOperator::trace() const {
    double t = 0.0;
    for (int k = 0; k < dim; ++k) t += (*this)(k, k);
    return t;
}

SymmetricEigen jacobi_eigen(std::vector<double> a, int d, double tol, int max_sweeps) {
    if (d < 1 || a.size() != static_cast<std::size_t>(d) * d)
        throw std::invalid_argument("jacobi_eigen: matrix is not d x d");
    std::vector<double> v(static_cast<std::size_t>(d) * d, 0.0);
    for (int k = 0; k < d; ++k) v[k * d + k] = 1.0;

    SymmetricEigen out;
    while (out.sweeps < max_sweeps && off_diagonal_norm(a, d) > tol) {
        ++out.sweeps;
        for (int p = 0; p < d - 1; ++p)
            for (int q = p + 1; q < d; ++q) {
                const double apq = a[p * d + q];
                if (apq == 0.0) continue;
                const double theta = (a[q * d + q] - a[p * d + p]) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < d; ++k) {
                    const double akp = a[k * d + p], akq = a[k * d + q];
                    a[k * d + p] = c * akp - s * akq;
                    a[k * d + q] = s * akp + c * akq;
                }
                for (int k = 0; k < d; ++k) {
                    const double apk = a[p * d + k], aqk = a[q * d + k];
                    a[p * d + k] = c * apk - s * aqk;
                    a[q * d + k] = s * apk + c * aqk;
                }
                for (int k = 0; k < d; ++k) {
                    const double vkp = v[k * d + p], vkq = v[k * d + q];
                    v[k * d + p] = c * vkp - s * vkq;
                    v[k * d + q] = s * vkp + c * vkq;
                }
            }
    }
    out.off_diagonal = off_diagonal_norm(a, d);

    std::vector<int> order(static_cast<std::size_t>(d));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a[x * d + x] > a[y * d + y]; });
    for (int k : order) {
        out.values.push_back(a[k * d + k]);
        for (int r = 0; r < d; ++r) out.vectors.push_back(v[r * d + k]);
    }
    return out;
}

FrameOperator frame_operator(const Configuration& config) {
    FrameOperator A = accumulate(config);
    if (std::abs(A.trace() - static_cast<double>(config.size())) > 1e-10)
        throw std::logic_error("frame_operator: trace differs from n");
    return A;
}

P2Polarization polarization_p2(const Configuration& config) {
    const FrameOperator A = frame_operator(config);
    const SymmetricEigen eig = jacobi_eigen(A.entries, A.dim);
    P2Polarization out;
    out.value = eig.values.front();
    out.witness.assign(eig.vectors.begin(), eig.vectors.begin() + A.dim);
    out.witness = normalized(out.witness);
    const auto lead = std::find_if(out.witness.begin(), out.witness.end(), [](double x) { return x != 0.0; });
    if (lead != out.witness.end() && *lead < 0.0)
        for (double& x : out.witness) x = -x;
    return out;
}

double frame_potential(const Configuration& config) {
    double s = 0.0;
    for (std::size_t i = 0; i < config.size(); ++i)
        for (std::size_t j = 0; j < config.size(); ++j) {
            const double g = dot(config[i], config[j]);
            s += g * g;
        }
    return s;
}

double isotropy_residual(const Configuration& config) {
    return residual_of(accumulate(config), static_cast<double>(config.size()));
}

IsotropyReport low_dim_isotropy_check(const Configuration& config, double tol) {
    IsotropyReport r;
    const double n = static_cast<double>(config.size());
    r.tolerance = tol;
    r.residual = isotropy_residual(config);
    r.is_isotropic = r.residual <= tol;
    if (config.dim() == 2) {
        std::complex<double> s{0.0, 0.0};
        for (std::size_t i = 0; i < config.size(); ++i) {
            const std::complex<double> z{config[i][0], config[i][1]};
            s += z * z;
        }
        r.planar_moment = s;
        r.moments_isotropic = std::abs(s) <= tol * n;
    } else if (config.dim() == 3) {
        // u and -u span the same line, so each point is first moved to the upper
        // hemisphere; there sqrt(1 - |z|^2) is the third coordinate itself.
        Disc3Moments m;
        for (std::size_t i = 0; i < config.size(); ++i) {
            const auto u = config[i];
            const double flip = u[2] < 0.0 ? -1.0 : 1.0;
            const std::complex<double> z{flip * u[0], flip * u[1]};
            m.radial += std::norm(z);
            m.square += z * z;
            m.lifted += z * std::abs(u[2]);
        }
        m.radial -= 2.0 * n / 3.0;
        r.disc_moments = m;
        r.moments_isotropic = std::abs(m.radial) <= tol * n && std::abs(m.square) <= tol * n &&
                              std::abs(m.lifted) <= tol * n;
    }
    return r;
}

UntfResult synthesize_untf(int n, int d, std::uint64_t seed, UntfOptions opts) {
    if (d < 1 || n < d) throw std::invalid_argument("synthesize_untf: requires n >= d >= 1");
    constexpr double kAccept = 1e-8;
    constexpr int kStallWindow = 50;
    const double nn = n;
    const auto du = static_cast<std::size_t>(d);

    int total_steps = 0;
    for (int restart = 0; restart <= opts.max_restarts; ++restart) {
        CounterRng rng(seed, static_cast<std::uint64_t>(restart));
        std::vector<double> x;
        x.reserve(static_cast<std::size_t>(n) * du);
        for (int i = 0; i < n; ++i) {
            const auto u = random_unit_vector(rng, d);
            x.insert(x.end(), u.begin(), u.end());
        }
        Configuration cur(d, x);
        FrameOperator A = accumulate(cur);
        double f = merit(A, nn);
        std::vector<double> window{f};

        std::vector<double> grad(x.size()), trial(x.size());
        for (int step = 0; step < opts.max_steps; ++step) {
            if (residual_of(A, nn) <= opts.target_residual) break;
            // Tangential part of 4 (A - (n/d) I) u_i.
            for (int i = 0; i < n; ++i) {
                const double* u = &x[i * du];
                double* g = &grad[i * du];
                for (int r = 0; r < d; ++r) {
                    double s = 0.0;
                    for (int c = 0; c < d; ++c) s += A(r, c) * u[c];
                    g[r] = 4.0 * s;
                }
                double radial = 0.0;
                for (int r = 0; r < d; ++r) radial += g[r] * u[r];
                for (int r = 0; r < d; ++r) g[r] -= radial * u[r];
            }
            bool moved = false;
            for (double t = 0.1; t > 1e-20; t *= 0.5) {
                for (int i = 0; i < n; ++i) {
                    double s = 0.0;
                    for (int r = 0; r < d; ++r) {
                        trial[i * du + r] = x[i * du + r] - t * grad[i * du + r];
                        s += trial[i * du + r] * trial[i * du + r];
                    }
                    s = std::sqrt(s);
                    for (int r = 0; r < d; ++r) trial[i * du + r] /= s;
                }
                Configuration next(d, trial);
                FrameOperator B = accumulate(next);
                const double g = merit(B, nn);
                if (g < f) {
                    x = trial;
                    A = std::move(B);
                    f = g;
                    moved = true;
                    break;
                }
            }
            ++total_steps;
            window.push_back(f);
            if (!moved) break;
            if (window.size() > kStallWindow) {
                const double old = window[window.size() - 1 - kStallWindow];
                if (old - f < 1e-14 * old) break;
            }
        }
        const double res = residual_of(A, nn);
        if (res <= kAccept) {
            UntfResult out{Configuration(d, x), res, 0.0, restart, total_steps};
            out.potential = frame_potential(out.frame);
            return out;
        }
    }
    throw std::runtime_error("synthesize_untf: no restart reached isotropy residual 1e-8");
}

}  // namespace polar
