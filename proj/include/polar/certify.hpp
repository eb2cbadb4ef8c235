#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polar/config.hpp"
#include "polar/sphere_net.hpp"

namespace polar {

/// Enclosure lower <= M^p(config) <= upper of the l_p-polarization.
struct MaxCertificate {
    double lower = 0.0;           ///< potential at `witness`
    double upper = 0.0;
    std::vector<double> witness;  ///< unit vector attaining `lower`
    double modulus = 0.0;         ///< continuity allowance at net_delta
    double net_delta = 0.0;
    std::string construction;     ///< net generator that produced the certificate
    bool certified = true;        ///< false when the budget ran out (upper is still an upper bound)
    bool underdetermined = false; ///< n < d
    std::size_t cells = 0;        ///< net points or branch-and-bound cells evaluated
};

/// Allowance added to a net maximum at covering radius delta: n p delta for p >= 1
/// (Lipschitz) and n delta^p for 0 < p < 1 (Hölder).
double continuity_modulus(std::size_t n, double p, double delta);

/// The covering radius at which continuity_modulus(n, p, delta) equals `gap`.
double delta_for_modulus(std::size_t n, double p, double gap);

struct CertifyOptions {
    std::size_t budget = kDefaultNetBudget;
};

/// Adaptive certificate: cells of a cube-sphere hierarchy are split until their upper
/// bound is within modulus(delta) of the best value found, so upper - lower <= modulus.
/// At p = 2 the certificate comes from the frame operator's top eigenvalue instead.
MaxCertificate certified_max(const Configuration& config, Exponent p, double delta, CertifyOptions opts = {});

/// Reference certificate: scan sphere_net(d, delta), refine the best point, and report
/// upper = net maximum + modulus.
MaxCertificate certified_max_flat(const Configuration& config, Exponent p, double delta, bool parallel = true,
                                  std::size_t budget = kDefaultNetBudget);

}  // namespace polar
