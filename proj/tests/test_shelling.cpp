#include <doctest.h>

#include "relkk/shelling.hpp"

using namespace relkk;

namespace {

RelativeComplex triangle_boundary() {
    return RelativeComplex(SimplicialComplex::from_facets(3, {{1, 2}, {1, 3}, {2, 3}}),
                           SimplicialComplex::void_complex(3));
}

RelativeComplex open_edges_on_4() {
    auto k4 = SimplicialComplex::from_facets(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    auto matching = SimplicialComplex::from_facets(4, {{1, 3}, {2, 4}});
    return RelativeComplex(k4, matching);
}

RelativeComplex open_edges_on_5() {
    auto k4 = SimplicialComplex::from_facets(5, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    auto matching = SimplicialComplex::from_facets(5, {{1, 3}, {2, 4}});
    return RelativeComplex(k4, matching);
}

} // namespace

TEST_CASE("verify a classical shelling") {
    auto psi = triangle_boundary();
    auto check = verify_shelling(psi, {{1, 2}, {1, 3}, {2, 3}});
    REQUIRE(check.ok);
    REQUIRE(check.steps.size() == 3);
    CHECK(check.steps[0].restriction == Face{});
    CHECK(check.steps[1].restriction == Face{3});
    CHECK(check.steps[2].restriction == Face{2, 3});
    CHECK(h_from_shelling(check.steps, 2).entries == std::vector<Int>{1, 1, 1});
}

TEST_CASE("open edges shell in any order") {
    auto psi = open_edges_on_4();
    std::vector<Face> order{{1, 2}, {2, 3}, {3, 4}, {1, 4}};
    auto check = verify_shelling(psi, order);
    REQUIRE(check.ok);
    for (std::size_t j = 0; j < order.size(); ++j) {
        CHECK(check.steps[j].restriction == order[j]); // each open edge is its own interval
    }
    CHECK(h_from_shelling(check.steps, 2).entries == std::vector<Int>{0, 0, 4});

    std::vector<Face> reversed(order.rbegin(), order.rend());
    CHECK(verify_shelling(psi, reversed).ok);
}

TEST_CASE("disjoint edges never shell") {
    auto psi = RelativeComplex(SimplicialComplex::from_facets(4, {{1, 2}, {3, 4}}),
                               SimplicialComplex::void_complex(4));
    auto check = verify_shelling(psi, {{1, 2}, {3, 4}});
    CHECK_FALSE(check.ok);
    CHECK(check.failed_step == 2);
    CHECK(check.minimal_faces.size() == 2);

    auto search = find_shelling(psi);
    CHECK(search.status == SearchStatus::exhausted);
}

TEST_CASE("verify rejects non-permutations") {
    auto psi = triangle_boundary();
    CHECK_THROWS_AS(verify_shelling(psi, {{1, 2}, {1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(verify_shelling(psi, {{1, 2}, {1, 3}, {1, 3}}), std::invalid_argument);
}

TEST_CASE("h_from_shelling rejects non-pure input") {
    std::vector<ShellingStep> steps{{{1, 2}, {}, 4}, {{3}, {3}, 1}};
    CHECK_THROWS_AS(h_from_shelling(steps, 2), std::invalid_argument);
}

TEST_CASE("find_shelling on standard fixtures") {
    auto found = find_shelling(open_edges_on_4());
    REQUIRE(found.status == SearchStatus::found);
    CHECK(verify_shelling(open_edges_on_4(), found.order).ok);

    auto simplex = RelativeComplex(SimplicialComplex::from_facets(4, {{1, 2, 3, 4}}),
                                   SimplicialComplex::void_complex(4));
    CHECK(find_shelling(simplex).status == SearchStatus::found);

    // tight budget reports exhaustion distinctly
    auto squeezed = find_shelling(open_edges_on_4(), 1);
    CHECK(squeezed.status == SearchStatus::budget_exceeded);
}

TEST_CASE("full shellability of the open-edge fixture") {
    auto no = is_fully_shellable(open_edges_on_4());
    CHECK(no.status == SearchStatus::exhausted);

    auto yes = is_fully_shellable(open_edges_on_5());
    REQUIRE(yes.status == SearchStatus::found);
    REQUIRE(yes.presentation.has_value());
    // the found presentation reproduces the relative face set
    CHECK(yes.presentation->faces() == open_edges_on_5().faces());
    CHECK(verify_shelling(*yes.presentation, yes.psi_order).ok);
    RelativeComplex delta_plain(yes.presentation->delta(),
                                SimplicialComplex::void_complex(5));
    CHECK(verify_shelling(delta_plain, yes.delta_order).ok);
    RelativeComplex gamma_plain(yes.presentation->gamma(),
                                SimplicialComplex::void_complex(5));
    CHECK(verify_shelling(gamma_plain, yes.gamma_order).ok);
}

TEST_CASE("restriction counts reconstruct the face counts") {
    // for a verified shelling, f_{k-1} = sum_i h_i * C(d-i, d-k)
    auto check_reconstruction = [](const RelativeComplex& psi, const std::vector<Face>& order,
                                   int d) {
        auto steps = verify_shelling(psi, order);
        REQUIRE(steps.ok);
        HVector h = h_from_shelling(steps.steps, d);
        FVector f = psi.f_vector();
        for (int k = 0; k <= d; ++k) {
            Int expect = 0;
            for (int i = 0; i <= d; ++i) {
                expect += h.entries[i] * binomial(d - i, static_cast<unsigned long>(d - k));
            }
            Int actual = k < static_cast<int>(f.entries.size()) ? f.entries[k] : Int(0);
            CHECK(actual == expect);
        }
    };
    check_reconstruction(triangle_boundary(), {{1, 2}, {1, 3}, {2, 3}}, 2);
    check_reconstruction(open_edges_on_4(), {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, 2);
    auto simplex = RelativeComplex(SimplicialComplex::from_facets(3, {{1, 2, 3}}),
                                   SimplicialComplex::void_complex(3));
    check_reconstruction(simplex, {{1, 2, 3}}, 3);
}

TEST_CASE("found orders always verify") {
    // every pure 1-dimensional complex on [4]
    auto edges = compressed_family(6, 2, 4, false);
    for (unsigned sel = 1; sel < 64; ++sel) {
        std::vector<Face> facets;
        for (int i = 0; i < 6; ++i) {
            if (sel >> i & 1) facets.push_back(edges[i]);
        }
        RelativeComplex psi(SimplicialComplex::from_facets(4, facets),
                            SimplicialComplex::void_complex(4));
        auto s = find_shelling(psi);
        REQUIRE(s.status != SearchStatus::budget_exceeded);
        if (s.status == SearchStatus::found) {
            CHECK(verify_shelling(psi, s.order).ok);
        }
    }
}

TEST_CASE("full shellability trivial cases") {
    auto simplex = RelativeComplex(SimplicialComplex::from_facets(3, {{1, 2, 3}}),
                                   SimplicialComplex::void_complex(3));
    CHECK(is_fully_shellable(simplex).status == SearchStatus::found);

    auto void_rel = RelativeComplex(SimplicialComplex::from_facets(2, {{1, 2}}),
                                    SimplicialComplex::from_facets(2, {{1, 2}}));
    CHECK(is_fully_shellable(void_rel).status == SearchStatus::found);
}
