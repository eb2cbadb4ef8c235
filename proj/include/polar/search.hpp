#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polar/certify.hpp"
#include "polar/config.hpp"

namespace polar {

/// n iid uniform points of S^{d-1}; vector i depends only on (seed, i).
Configuration random_configuration(int n, int d, std::uint64_t seed);

struct StructuredStarts {
    bool onb_copies = true;
    bool untf = true;
    bool planar_equispaced = true;  ///< d = 2 only
};

struct SearchOptions {
    int restarts = 4;              ///< seeded random starts, after the structured ones
    double net_delta = 1e-2;       ///< covering radius of the certificates
    int outer_steps = 200;
    double smoothing = 0.0;        ///< soft-max beta; 0 means 50 / n
    std::uint64_t seed = 0;
    StructuredStarts structured;
    std::size_t surrogate_points = 2048;  ///< size cap of the fixed net inside the surrogate
    int certify_every = 25;
};

struct StartSummary {
    std::string label;
    double initial_upper = 0.0;  ///< certified upper of the starting configuration
    double final_upper = 0.0;    ///< best certified upper reached from this start
};

struct SearchResult {
    Configuration best;
    MaxCertificate certificate;
    double lower_bound = 0.0;  ///< n mu_{d,p}
    double gap = 0.0;          ///< certificate.upper - lower_bound
    std::string start;         ///< which start produced `best`
    int step = 0;              ///< outer step at which `best` was certified
    bool converged = true;     ///< false if some certificate ran out of budget
    double beta = 0.0;
    std::size_t surrogate_size = 0;
    std::vector<StartSummary> starts;
};

/// Heuristic minimization of M^p over n-point configurations: soft-max surrogate descent
/// with periodic certification; returns the smallest certified upper bound found.
SearchResult minimize_polarization(int n, int d, Exponent p, const SearchOptions& opts = {});

struct PlanarSearchResult {
    std::vector<double> lines;  ///< line angles in [0, pi)
    double value = 0.0;         ///< max over S^1 of the potential of the lines
    int restart = 0;
};

/// max over phi of sum_k |cos(phi - a_k)|^p, from the refined local maxima of a grid.
double planar_polarization(const std::vector<double>& lines, double p);

/// Minimizes M^p over n lines in R^2 from `restarts` random starts of stream (seed, stream).
PlanarSearchResult minimize_planar(int n, Exponent p, std::uint64_t seed, int restarts, std::uint64_t stream = 0);

}  // namespace polar
