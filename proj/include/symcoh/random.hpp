#pragma once

#include "symcoh/ring.hpp"

#include <random>

namespace symcoh {

/// Random homogeneous class: `terms` basis monomials of degree k with small nonzero rational coefficients.
inline CohClass random_class(const SpaceSpec& space, int k, std::mt19937_64& rng, int terms = 4) {
    CohClass c(space);
    auto b = basis(space, k);
    if (b.empty()) return c;
    std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
    for (int t = 0; t < terms; ++t) {
        int p = num(rng);
        if (p == 0) p = 1;
        c.add_term(b[pick(rng)], Rational(p) / Rational(den(rng)));
    }
    return c;
}

}  // namespace symcoh
