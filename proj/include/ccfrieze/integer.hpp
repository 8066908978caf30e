#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ccfrieze {

// rho values are exact positive integers that outgrow 64 bits quickly for
// large cliques, so all counting is done in arbitrary precision.
using Integer = boost::multiprecision::cpp_int;

// Exact binomial coefficient; 0 when k < 0 or k > n, n must be >= 0.
Integer binomial(int n, int k);

}  // namespace ccfrieze
