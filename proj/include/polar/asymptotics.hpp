#pragma once

#include <string>

#include "polar/config.hpp"

namespace polar {

/// log Gamma(x + a) - log Gamma(x) for x > 0, a >= 0, without forming either term.
double log_gamma_ratio(double x, double a);

/// log of mu_{d,p} = Gamma(d/2) Gamma((p+1)/2) / (sqrt(pi) Gamma((d+p)/2)).
double log_mu(int d, double p);

/// Mean of |<v,u>|^p over uniform v on S^{d-1}. Underflows to 0 where log_mu < -745.
double mu(int d, Exponent p);

/// Gamma(p+1) / Gamma(p/2+1)^2, the central binomial coefficient C(p, p/2).
double mu_tilde(Exponent p);

/// Lower bound n mu_{d,p} against the k-fold orthonormal-basis construction.
struct BoundsReport {
    int n = 0;
    int d = 0;
    double p = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    Configuration construction;
    int copies = 0;        ///< k = ceil(n / d)
    int last_copy = 0;     ///< basis vectors kept from the last (possibly truncated) copy
    double c_bound = 0.0;  ///< 2^{p/2}
    double normalized_upper = 0.0;  ///< upper / (n d^{-p/2})
    std::string truncation;
};

/// Requires n >= d >= 1. `upper` is the exact maximum of the construction's potential.
BoundsReport theorem1_bounds(int n, int d, Exponent p);

/// Exact max over the unit sphere of sum_j c_j |v_j|^p for nonnegative multiplicities c_j.
double weighted_coordinate_max(const std::vector<int>& multiplicity, double p);

/// base in the first d coordinates of R^{2d}, followed by a copy in the last d.
Configuration doubling_construction(const Configuration& base);

}  // namespace polar
