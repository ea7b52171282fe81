#pragma once

#include <random>

#include "prolong/basefield.hpp"
#include "prolong/linear.hpp"

namespace prolong {

/// Small random rational p/q with |p| <= 9, 1 <= q <= 4.
Rational random_rational(std::mt19937_64& rng, bool allow_zero = true);

/// Random base element: a rational over Q; over Q(t) a polynomial of
/// t-degree <= 2 divided, with probability 1/3, by a random monic linear
/// factor.
BaseElem random_elem(std::mt19937_64& rng, Field field);

Vector random_point(std::mt19937_64& rng, std::size_t n, Field field);

}  // namespace prolong
