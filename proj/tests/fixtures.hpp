#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "simpdelta/models.hpp"

namespace fixtures {

// {z, z^2} for the fundamental class z, plus two seeded sums of them.
inline std::vector<simpdelta::AlgebraElement> spanning_cycles(const simpdelta::AlgebraModel& a,
                                                              std::uint64_t seed) {
    using simpdelta::AlgebraElement;
    const auto z = simpdelta::fundamental_class(a);
    const auto z2 = simpdelta::multiply(a, z, z);
    std::vector<AlgebraElement> out{z, z2};
    std::mt19937_64 rng(seed);
    for (int k = 0; k < 2; ++k) {
        AlgebraElement c(z.degree());
        if (rng() % 2) c += z;
        if (rng() % 2) c += z2;
        out.push_back(c + z);
    }
    return out;
}

}  // namespace fixtures
