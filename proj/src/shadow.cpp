#include "relkk/shadow.hpp"

#include <stdexcept>

namespace relkk {

namespace {

// Largest m with C(m, k) <= r. Requires r >= 0, k >= 1.
Int largest_top(const Int& r, unsigned long k) {
    // For r >= 1 the answer is >= k; for r = 0 the caller never asks.
    Int lo = k;
    Int hi = lo + 1;
    while (binomial(hi, k) <= r) {
        lo = hi;
        hi *= 2;
    }
    // invariant: C(lo,k) <= r < C(hi,k)
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (binomial(mid, k) <= r) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

void require_valid(const Int& r, unsigned long k, const char* who) {
    if (r < 0) {
        throw std::invalid_argument(std::string(who) + ": r must be non-negative");
    }
    if (k == 0) {
        throw std::invalid_argument(std::string(who) + ": k must be positive");
    }
}

} // namespace

Int BinomialRep::value() const {
    Int sum = 0;
    for (const auto& t : terms) {
        sum += binomial(t.top, t.index);
    }
    return sum;
}

BinomialRep binomial_rep(const Int& r, unsigned long k) {
    require_valid(r, k, "binomial_rep");
    BinomialRep rep;
    rep.k = k;
    Int rem = r;
    unsigned long i = k;
    while (rem > 0 && i >= 1) {
        Int top = largest_top(rem, i);
        rem -= binomial(top, i);
        rep.terms.push_back({top, i});
        --i;
    }
    // The greedy step keeps tops strictly decreasing, so rem is 0 by i = 1.
    return rep;
}

Int lower_shadow(const Int& r, unsigned long k) {
    require_valid(r, k, "lower_shadow");
    Int sum = 0;
    for (const auto& t : binomial_rep(r, k).terms) {
        sum += binomial(t.top, t.index - 1);
    }
    return sum;
}

Int macaulay_shadow(const Int& r, unsigned long k) {
    require_valid(r, k, "macaulay_shadow");
    Int sum = 0;
    for (const auto& t : binomial_rep(r, k).terms) {
        // top >= index >= 1 for every retained term, so top - 1 >= 0.
        sum += binomial(t.top - 1, t.index - 1);
    }
    return sum;
}

Int upper_shadow(const Int& r, unsigned long k) {
    require_valid(r, k, "upper_shadow");
    Int sum = 0;
    for (const auto& t : binomial_rep(r, k).terms) {
        sum += binomial(t.top + 1, t.index + 1);
    }
    return sum;
}

} // namespace relkk
