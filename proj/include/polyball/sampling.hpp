#pragma once

#include <random>

#include "polyball/ratlin.hpp"

namespace polyball::detail {

/// Small random rational p/q with |p| <= num_abs_max, 1 <= q <= den_max.
inline Rational random_rational(std::mt19937_64& rng, int num_abs_max, int den_max) {
    std::uniform_int_distribution<long> num(-num_abs_max, num_abs_max);
    std::uniform_int_distribution<long> den(1, den_max);
    return Rational(num(rng), den(rng));
}

inline RatVec random_ratvec(std::mt19937_64& rng, int dim, int num_abs_max, int den_max) {
    RatVec v(static_cast<std::size_t>(dim));
    for (auto& x : v) x = random_rational(rng, num_abs_max, den_max);
    return v;
}

}  // namespace polyball::detail
