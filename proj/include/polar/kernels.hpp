#pragma once

// Hot loops shared by certification, search and the planar module. Every kernel has a
// serial reference and an OpenMP variant; the OpenMP variants write per-index results
// and reduce them in index order, so both return bit-identical values.

#include <cstddef>
#include <span>
#include <vector>

#include "polar/config.hpp"

namespace polar::kernels {

struct ArgMax {
    std::size_t index = 0;
    double value = 0.0;
};

/// Max over a row-major point list of the potential; ties go to the lowest index.
namespace serial {
ArgMax potential_argmax(const Configuration& config, double p, std::span<const double> points);
std::vector<double> potentials(const Configuration& config, double p, std::span<const double> points);
/// max over the grid z_j = exp(2 pi i j / m) of sum_k |z_j - exp(i a_k)|^p.
ArgMax torus_grid_max(std::span<const double> angles, double p, std::size_t m);
}  // namespace serial

namespace parallel {
ArgMax potential_argmax(const Configuration& config, double p, std::span<const double> points);
std::vector<double> potentials(const Configuration& config, double p, std::span<const double> points);
ArgMax torus_grid_max(std::span<const double> angles, double p, std::size_t m);
}  // namespace parallel

/// Index-ordered reduction used by both variants.
ArgMax argmax(std::span<const double> values);

/// (1/beta) log sum_j exp(beta v_j), stabilized by the maximum, summed in index order.
double log_sum_exp(std::span<const double> values, double beta);

}  // namespace polar::kernels
