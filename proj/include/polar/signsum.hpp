#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polar/certify.hpp"
#include "polar/config.hpp"

namespace polar {

enum class SignSumStatus { exact, bang_certified };

std::string to_string(SignSumStatus s);

struct SignSumResult {
    std::vector<int> signs;  ///< entries +1 / -1, first entry +1
    double norm = 0.0;       ///< |sum_i signs_i u_i|, recomputed from the signs
    SignSumStatus status = SignSumStatus::exact;
    double bang_margin = 0.0;  ///< min_k signs_k <u_k, z>
};

inline constexpr int kMaxEnumeration = 30;

/// Recomputes z = sum_i signs_i u_i, its norm and the Bang margin.
SignSumResult evaluate_signs(const Configuration& config, std::vector<int> signs, SignSumStatus status);

/// Full Gray-code enumeration of the 2^{n-1} patterns with signs_1 = +1. Ties (within a
/// relative 1e-12) go to the lexicographically smallest pattern, ordering + before -.
/// Throws BudgetExceeded for n > 30.
SignSumResult max_sign_sum_exact(const Configuration& config);

/// Best of `starts` seeded hill climbs, each flipping the sign with the smallest
/// margin until every margin is >= 1 - 1e-12.
SignSumResult max_sign_sum_local(const Configuration& config, std::uint64_t seed, int starts = 32);

struct Prop3Check {
    double sign_norm = 0.0;
    MaxCertificate enclosure;
    bool consistent = false;
};

/// max over signs of |sum eps_i u_i| against the certified l_1 polarization.
Prop3Check prop3_crosscheck(const Configuration& config, double delta);

/// The h+1 vertices of a regular simplex in the first h coordinates plus the basis
/// vectors e_{h+1}..e_d. h defaults to the largest even number <= d; it must be even
/// and in [2, d], so d = 1 has no such configuration.
Configuration simplex_union_onb(int d, std::optional<int> h = std::nullopt);

struct SimplexValue {
    int h = 0;
    double norm = 0.0;
    bool attains = false;  ///< norm within 1e-9 of sqrt(d + 2)
};

struct ConjectureReport {
    int d = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    double min_over_trials = 0.0;
    int violations = 0;  ///< trials with max norm < sqrt(d + 2) - 1e-9
    double sharp_value = 0.0;
    std::vector<SimplexValue> constructions;  ///< one per even h in [2, d]
    bool simplex_attains = false;             ///< the default-h construction attains sqrt(d + 2)
};

/// Exact max sign sums of `trials` samples of d+1 uniform unit vectors in R^d.
ConjectureReport conjecture1_harness(int d, int trials, std::uint64_t seed);

}  // namespace polar
