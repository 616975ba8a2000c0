#include <doctest.h>

#include "relkk/shadow.hpp"
#include "test_oracles.hpp"

using namespace relkk;
using namespace testsupport;

TEST_CASE("binomial basics and big values") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(68, 34) == Int("28453041475240576740"));
    // cross-check the multiplicative formula against repeated addition
    for (int n = 0; n <= 70; ++n) {
        for (int k = 0; k <= n; k += 7) {
            CHECK(binomial(n, k) == pascal(n, k));
        }
    }
    CHECK_THROWS_AS(binomial(-1, 2), std::invalid_argument);
}

TEST_CASE("cascade representation matches the unique full expansion") {
    auto rep = binomial_rep(5, 2);
    REQUIRE(rep.terms.size() == 2);
    CHECK(rep.terms[0].top == 3);
    CHECK(rep.terms[0].index == 2);
    CHECK(rep.terms[1].top == 2);
    CHECK(rep.terms[1].index == 1);

    rep = binomial_rep(4, 3);
    REQUIRE(rep.terms.size() == 1);
    CHECK(rep.terms[0].top == 4);
    CHECK(rep.terms[0].index == 3);

    CHECK(binomial_rep(0, 2).terms.empty());

    for (int k = 1; k <= 4; ++k) {
        for (long r = 0; r <= 40; ++r) {
            auto found = full_cascade_representations(r, k, static_cast<int>(r) + k + 1);
            REQUIRE(found.size() == 1); // uniqueness of the full-length expansion
            // the library keeps exactly the positive-value terms of it
            std::vector<std::pair<int, int>> expected;
            int index = k;
            for (int top : found[0]) {
                if (top >= index) expected.push_back({top, index});
                --index;
            }
            auto lib = binomial_rep(r, static_cast<unsigned long>(k));
            REQUIRE(lib.terms.size() == expected.size());
            for (std::size_t i = 0; i < expected.size(); ++i) {
                CHECK(lib.terms[i].top == expected[i].first);
                CHECK(lib.terms[i].index == static_cast<unsigned long>(expected[i].second));
            }
            CHECK(lib.value() == r);
        }
    }
}

TEST_CASE("representation round trip") {
    for (unsigned long k = 1; k <= 6; ++k) {
        for (long r = 0; r <= 10000; r += (r < 200 ? 1 : 37)) {
            CHECK(binomial_rep(r, k).value() == r);
        }
    }
}

TEST_CASE("shadow values from the definitions") {
    CHECK(lower_shadow(4, 2) == 4);
    CHECK(lower_shadow(4, 3) == 6);
    CHECK(lower_shadow(0, 5) == 0);
    CHECK(macaulay_shadow(4, 2) == 3);
    CHECK(macaulay_shadow(4, 3) == 3);
    CHECK(macaulay_shadow(0, 3) == 0);
    CHECK(upper_shadow(2, 1) == 3);
    CHECK(upper_shadow(4, 2) == 5);
    CHECK(upper_shadow(0, 4) == 0);
    CHECK_THROWS_AS(lower_shadow(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(macaulay_shadow(-1, 2), std::invalid_argument);
}

TEST_CASE("shadow monotonicity") {
    for (unsigned long k = 1; k <= 5; ++k) {
        Int prev_l = 0, prev_m = 0, prev_u = 0;
        for (long r = 0; r <= 500; ++r) {
            Int l = lower_shadow(r, k), m = macaulay_shadow(r, k), u = upper_shadow(r, k);
            if (r > 0) {
                CHECK(l >= prev_l);
                CHECK(m >= prev_m);
                CHECK(u >= prev_u);
            }
            prev_l = l;
            prev_m = m;
            prev_u = u;
        }
    }
}

TEST_CASE("shadow identities") {
    for (unsigned long k = 1; k <= 5; ++k) {
        for (long r = 0; r <= 500; ++r) {
            CHECK(macaulay_shadow(upper_shadow(r, k), k + 1) == r);
        }
    }
    for (unsigned long k = 2; k <= 5; ++k) {
        for (long r = 0; r <= 500; ++r) {
            CHECK(upper_shadow(macaulay_shadow(r, k), k - 1) >= r);
        }
    }
}

TEST_CASE("shadows agree with compressed family counts") {
    for (int k = 1; k <= 4; ++k) {
        for (int r = 0; r <= 100; ++r) {
            CHECK(lower_shadow(r, static_cast<unsigned long>(k)) == set_family_shadow(r, k));
            CHECK(macaulay_shadow(r, static_cast<unsigned long>(k)) ==
                  multiset_family_shadow(r, k));
        }
    }
    for (int k = 1; k <= 4; ++k) {
        for (int r = 0; r <= 100; ++r) {
            CHECK(upper_shadow(r, static_cast<unsigned long>(k)) ==
                  multiset_family_upper(r, k));
        }
    }
}
