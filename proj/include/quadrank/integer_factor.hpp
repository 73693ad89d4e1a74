#pragma once

#include <utility>
#include <vector>

#include "quadrank/rational.hpp"

namespace quadrank {

/// Prime factorization of |n| (n != 0) as ascending (prime, exponent) pairs.
/// Trial division for small factors, Pollard-Brent for the rest.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

/// All positive divisors of |n| (n != 0), ascending.
std::vector<Integer> positive_divisors(const Integer& n);

}  // namespace quadrank
