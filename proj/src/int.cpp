#include "relkk/int.hpp"

#include <stdexcept>

namespace relkk {

Int binomial(const Int& n, unsigned long k) {
    if (k == 0) return 1; // C(n,0) = 1 for every n, the empty ground set included
    if (n < 0) {
        throw std::invalid_argument("binomial: n must be non-negative when k > 0");
    }
    if (Int(k) > n) {
        return 0;
    }
    // Multiplicative form; each intermediate division is exact.
    Int result = 1;
    for (unsigned long i = 1; i <= k; ++i) {
        result *= n - Int(k) + Int(i);
        result /= Int(i);
    }
    return result;
}

} // namespace relkk
