#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "polar/acceptance.hpp"

int main(int argc, char** argv) {
    polar::AcceptanceOptions opts;
    if (argc > 1) opts.seed = std::strtoull(argv[1], nullptr, 10);

    std::vector<polar::CriterionOutcome> outcomes;
    const polar::CriterionOutcome determinism = polar::determinism_check(opts, &outcomes);
    outcomes.push_back(determinism);

    bool all = true;
    for (const auto& o : outcomes) {
        std::cout << polar::summary_line(o) << '\n';
        all = all && o.passed();
    }
    std::cerr << polar::acceptance_json(outcomes).dump(2) << '\n';
    return all ? 0 : 1;
}
