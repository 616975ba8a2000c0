#pragma once

#include <vector>

#include "relkk/int.hpp"

namespace relkk {

/// One term C(top, index) of a cascade representation.
struct BinomialTerm {
    Int top;
    unsigned long index;
};

/// The cascade representation of a non-negative integer r with parameter k:
/// r = C(r_k, k) + C(r_{k-1}, k-1) + ... with r_k > r_{k-1} > ... and every
/// retained term positive. r = 0 is represented by the empty term list.
struct BinomialRep {
    unsigned long k = 0;
    std::vector<BinomialTerm> terms; // index strictly descending from k

    Int value() const;
};

/// Greedy cascade representation of r with parameter k >= 1.
BinomialRep binomial_rep(const Int& r, unsigned long k);

/// Lower shadow: sum of C(r_i, i-1) over the representation of r.
Int lower_shadow(const Int& r, unsigned long k);

/// Macaulay shadow: sum of C(r_i - 1, i-1) over the representation of r.
Int macaulay_shadow(const Int& r, unsigned long k);

/// Upper shadow: sum of C(r_i + 1, i+1) over the representation of r.
Int upper_shadow(const Int& r, unsigned long k);

} // namespace relkk
