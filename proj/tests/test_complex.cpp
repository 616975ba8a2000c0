#include <doctest.h>

#include <random>

#include "relkk/complex.hpp"
#include "relkk/realizability.hpp"
#include "relkk/shadow.hpp"

using namespace relkk;

namespace {

SimplicialComplex k4() {
    return SimplicialComplex::from_facets(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

SimplicialComplex matching_with_vertices() {
    return SimplicialComplex::from_facets(4, {{1, 3}, {2, 4}});
}

} // namespace

TEST_CASE("revlex comparisons") {
    CHECK(revlex_compare({1, 3}, {2, 3}) < 0);
    CHECK(revlex_compare({2, 3}, {1, 4}) < 0);
    CHECK(revlex_compare({1, 2}, {1, 2}) == 0);
    CHECK_THROWS_AS(revlex_compare({1}, {1, 2}), std::invalid_argument);
    CHECK(graded_revlex_compare({3}, {1, 2}) < 0);
}

TEST_CASE("compressed families") {
    auto fam = compressed_family(4, 2, 4, false);
    REQUIRE(fam.size() == 4);
    CHECK(fam[0] == Face{1, 2});
    CHECK(fam[1] == Face{1, 3});
    CHECK(fam[2] == Face{2, 3});
    CHECK(fam[3] == Face{1, 4});

    auto mfam = compressed_family(3, 2, 2, true);
    REQUIRE(mfam.size() == 3);
    CHECK(mfam[0] == MultiFace{1, 1});
    CHECK(mfam[1] == MultiFace{1, 2});
    CHECK(mfam[2] == MultiFace{2, 2});

    CHECK(compressed_family(0, 3, 5, false).empty());
    CHECK_THROWS_AS(compressed_family(7, 2, 3, false), std::invalid_argument);

    // initial segments are nested and independent of the ground size
    auto small = compressed_family(5, 2, 5, false);
    auto large = compressed_family(9, 2, 7, false);
    for (std::size_t i = 0; i < small.size(); ++i) CHECK(small[i] == large[i]);
}

TEST_CASE("f-vectors of complexes and presentations") {
    auto edge = SimplicialComplex::from_facets(2, {{1, 2}});
    auto boundary = SimplicialComplex::from_facets(2, {{1}, {2}});
    RelativeComplex ex12(edge, boundary);
    CHECK(ex12.f_vector().entries == std::vector<Int>{0, 0, 1});

    RelativeComplex open_edges(k4(), matching_with_vertices());
    CHECK(open_edges.f_vector().entries == std::vector<Int>{0, 0, 4});

    auto triangle = SimplicialComplex::from_facets(3, {{1, 2}, {1, 3}, {2, 3}});
    RelativeComplex plain(triangle, SimplicialComplex::void_complex(3));
    CHECK(plain.f_vector().entries == std::vector<Int>{1, 3, 3});

    // malformed presentation
    CHECK_THROWS_AS(RelativeComplex(boundary, edge), std::invalid_argument);
}

TEST_CASE("f/h conversions") {
    CHECK(f_to_h(FVector({1, 3, 3}), 2).entries == std::vector<Int>{1, 1, 1});
    CHECK(f_to_h(FVector({0, 0, 1}), 2).entries == std::vector<Int>{0, 0, 1});
    CHECK(f_to_h(FVector({0, 0, 4}), 2).entries == std::vector<Int>{0, 0, 4});
    CHECK(h_to_f(HVector({1, 1, 1})).entries == std::vector<Int>{1, 3, 3});

    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> len(1, 8), val(-20, 20);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Int> v(len(rng));
        for (auto& e : v) e = val(rng);
        const int d = static_cast<int>(v.size()) - 1;
        CHECK(h_to_f_coeffs(f_to_h_coeffs(v, d)) == v);
        CHECK(f_to_h_coeffs(h_to_f_coeffs(v), d) == v);
    }
}

TEST_CASE("compressed complexes") {
    auto c = compressed_complex(FVector({1, 4, 4}), 4);
    auto faces = c.faces();
    CHECK(faces.count({1, 2}));
    CHECK(faces.count({1, 3}));
    CHECK(faces.count({2, 3}));
    CHECK(faces.count({1, 4}));
    CHECK(c.f_vector().entries == std::vector<Int>{1, 4, 4});

    auto m = compressed_multicomplex(FVector({1, 2, 1}), 2);
    REQUIRE(m.faces().size() == 4);
    CHECK(m.contains({}));
    CHECK(m.contains({1}));
    CHECK(m.contains({2}));
    CHECK(m.contains({1, 1}));

    auto trivial = compressed_complex(FVector({1}), 3);
    CHECK_FALSE(trivial.is_void());
    CHECK(trivial.faces().size() == 1);

    CHECK_THROWS_AS(compressed_complex(FVector({1, 3, 4}), 5), std::invalid_argument);
    CHECK_THROWS_AS(compressed_complex(FVector({1, 5}), 4), std::invalid_argument);
}

TEST_CASE("compressed containment") {
    // feasible vectors with entries <= 6 on [6]: componentwise domination
    // implies containment of the compressed complexes
    std::vector<FVector> feasible;
    for (int a = 0; a <= 6; ++a) {
        for (int b = 0; b <= 6; ++b) {
            FVector f({1, a, b});
            f = f.trimmed();
            if (!f.entries.empty() && a <= 6 &&
                kruskal_katona_check(f).accepted && Int(a) <= 6) {
                feasible.push_back(f);
            }
        }
    }
    for (const auto& f : feasible) {
        for (const auto& g : feasible) {
            bool dominated = g.entries.size() <= f.entries.size();
            if (dominated) {
                for (std::size_t i = 0; i < g.entries.size(); ++i) {
                    if (g.entries[i] > f.entries[i]) {
                        dominated = false;
                        break;
                    }
                }
            }
            if (!dominated) continue;
            auto big = compressed_complex(f, 6);
            auto small = compressed_complex(g, 6);
            for (const auto& face : small.faces()) {
                CHECK(big.contains(face));
            }
        }
    }
}

TEST_CASE("shadow of a family") {
    auto sh = shadow_of_family({{1, 2}, {1, 3}});
    REQUIRE(sh.size() == 3);
    CHECK(shadow_of_family({}).empty());
    auto first4 = compressed_family(4, 2, 4, false);
    CHECK(shadow_of_family(first4).size() == 4); // matches the lower shadow of 4
    CHECK_THROWS_AS(shadow_of_family({{1, 2}, {3}}), std::invalid_argument);
}

TEST_CASE("compressed families attain the shadow operator") {
    for (int k = 1; k <= 4; ++k) {
        for (int r = 0; r <= 100; ++r) {
            auto fam = compressed_family(r, k, 110, false);
            CHECK(Int(shadow_of_family(fam).size()) ==
                  lower_shadow(r, static_cast<unsigned long>(k)));
        }
    }
}

TEST_CASE("void versus empty complex") {
    auto v = SimplicialComplex::void_complex(3);
    CHECK(v.is_void());
    CHECK(v.f_vector().entries.empty());
    auto e = SimplicialComplex::empty_face_complex(3);
    CHECK_FALSE(e.is_void());
    CHECK(e.f_vector().entries == std::vector<Int>{1});
    CHECK(v != e);
}

TEST_CASE("multicomplex closure validation") {
    CHECK_THROWS_AS(Multicomplex::from_faces(2, {{1, 1}}), std::invalid_argument);
    auto ok = Multicomplex::from_faces(2, {{}, {1}, {1, 1}});
    CHECK(ok.f_vector().entries == std::vector<Int>{1, 1, 1});
}
