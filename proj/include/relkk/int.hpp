#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace relkk {

// Exact arbitrary-precision integer used for all counts. Shadow values and
// face counts overflow 64 bits quickly (C(68,34) already does).
using Int = boost::multiprecision::cpp_int;

/// C(n,k), exact; C(n,0) = 1 for every n, 0 when k > n >= 0.
Int binomial(const Int& n, unsigned long k);

} // namespace relkk
