#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "polar/config.hpp"

namespace polar {

/// A = sum_i u_i u_i^T, d x d row-major.
struct FrameOperator {
    int dim = 0;
    std::vector<double> entries;
    double operator()(int r, int c) const { return entries[static_cast<std::size_t>(r) * dim + c]; }
    double trace() const;
};

struct SymmetricEigen {
    std::vector<double> values;   ///< descending
    std::vector<double> vectors;  ///< row k is the unit eigenvector of values[k]
    int sweeps = 0;
    double off_diagonal = 0.0;    ///< Frobenius norm of the remaining off-diagonal part
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is <= tol.
SymmetricEigen jacobi_eigen(std::vector<double> a, int dim, double tol = 1e-12, int max_sweeps = 100);

/// Accumulates in index order; throws if the trace misses n by more than 1e-10.
FrameOperator frame_operator(const Configuration& config);

struct P2Polarization {
    double value = 0.0;
    std::vector<double> witness;  ///< first nonzero coordinate positive
};

/// M^2(config) = largest eigenvalue of the frame operator.
P2Polarization polarization_p2(const Configuration& config);

/// sum over ordered pairs (i, j), including i = j, of <u_i, u_j>^2.
double frame_potential(const Configuration& config);

/// max-norm of A - (n/d) I.
double isotropy_residual(const Configuration& config);

inline constexpr double kIsotropyTolerance = 1e-9;

struct Disc3Moments {
    double radial = 0.0;            ///< sum |z_i|^2 - 2n/3
    std::complex<double> square;    ///< sum z_i^2
    std::complex<double> lifted;    ///< sum z_i sqrt(1 - |z_i|^2)
};

struct IsotropyReport {
    double residual = 0.0;
    double tolerance = kIsotropyTolerance;
    bool is_isotropic = false;
    std::optional<std::complex<double>> planar_moment;  ///< d = 2
    std::optional<Disc3Moments> disc_moments;            ///< d = 3
    bool moments_isotropic = false;  ///< the complex-moment test (d = 2, 3)
};

/// Residual test for any d plus the complex-moment characterizations for d = 2, 3.
IsotropyReport low_dim_isotropy_check(const Configuration& config, double tol = kIsotropyTolerance);

struct UntfOptions {
    double target_residual = 1e-12;  ///< success needs <= 1e-8; descent continues to this
    int max_restarts = 20;
    int max_steps = 200'000;
};

struct UntfResult {
    Configuration frame;
    double residual = 0.0;
    double potential = 0.0;
    int restarts = 0;
    int steps = 0;
};

/// Projected gradient descent on the frame potential over (S^{d-1})^n from a seeded
/// random start. Throws std::runtime_error if no restart reaches residual 1e-8.
UntfResult synthesize_untf(int n, int d, std::uint64_t seed, UntfOptions opts = {});

}  // namespace polar
