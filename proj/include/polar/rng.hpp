#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <vector>

namespace polar {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Counter-based generator: output k of stream (seed, stream) is a pure hash of
/// (seed, stream, k), so any parallel schedule reproduces the serial draws.
class CounterRng {
public:
    using result_type = std::uint64_t;

    CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
        : key_(mix64(seed ^ mix64(stream + 0x632be59bd9b4e019ULL))) {}

    /// Derives an independent stream keyed by one more index.
    CounterRng split(std::uint64_t index) const noexcept { return CounterRng(key_, index); }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept { return mix64(key_ + mix64(counter_++)); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    double normal() {
        std::normal_distribution<double> n01(0.0, 1.0);
        return n01(*this);
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// A uniformly distributed point on S^{dim-1} (normalized Gaussian).
std::vector<double> random_unit_vector(CounterRng& rng, int dim);

}  // namespace polar
