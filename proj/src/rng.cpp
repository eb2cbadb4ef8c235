#include "polar/rng.hpp"

#include <cmath>

namespace polar {

std::vector<double> random_unit_vector(CounterRng& rng, int dim) {
    std::vector<double> v(static_cast<std::size_t>(dim));
    for (;;) {
        double s = 0.0;
        for (double& x : v) {
            x = rng.normal();
            s += x * x;
        }
        if (s > 1e-300) {
            const double r = std::sqrt(s);
            for (double& x : v) x /= r;
            return v;
        }
    }
}

}  // namespace polar
