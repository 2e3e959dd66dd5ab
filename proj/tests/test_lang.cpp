#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "tilings/lang.hpp"

using namespace tilings;

TEST_CASE("admissible squares") {
    CHECK(admissible_squares(fixture::stripes(), 1).size() == 4);
    CHECK(admissible_squares(fixture::stripes(), 2).size() == 11);
    CHECK(admissible_squares(fixture::stripes(), 3).size() == 25);
    const auto cb = admissible_squares(fixture::checkerboard(), 2);
    REQUIRE(cb.size() == 2);
    CHECK(cb[0].at({0, 0}) == State{0});
    CHECK(cb[0].at({1, 0}) == State{1});
    CHECK(cb[0].at({0, 1}) == State{1});
    CHECK(std::is_sorted(cb.begin(), cb.end()));
}

TEST_CASE("admissible counts match the row-stacking oracle") {
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        const auto d = oracle::random_dominoes(seed % 2 ? 2 : 3, seed);
        const TileSet ts = fixture::from_dominoes(d);
        for (int n = 1; n <= 3; ++n) CHECK(admissible_squares(ts, n).size() == oracle::count_admissible(d, n));
    }
}

TEST_CASE("extensible squares") {
    const auto& ts = fixture::stripes();
    CHECK(extensible_squares(ts, 2, 0) == admissible_squares(ts, 2));
    CHECK(extensible_squares(ts, 2, 3).size() == 11);

    // {a, b} with only the hpair ab: no row of length 3
    auto ab = make_alphabet({"a", "b"});
    TileSet row_only(ab, {ShapeRule{{{0, 0}, {1, 0}}, {{0, 1}}},
                          ShapeRule{{{0, 0}, {0, 1}}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}}});
    CHECK(admissible_squares(row_only, 1).size() == 2);
    CHECK(extensible_squares(row_only, 1, 1).empty());
    CHECK_THROWS_AS(extensible_squares(ts, 0, 1), UsageError);
}

TEST_CASE("transfer graphs") {
    const auto s1 = build_transfer_graph(fixture::stripes(), 1, true);
    CHECK(s1.vertex_count() == 4);
    CHECK(s1.edge_count() == 7);
    CHECK(build_transfer_graph(fixture::checkerboard(), 1, true).vertex_count() == 0);
    const auto c2 = build_transfer_graph(fixture::checkerboard(), 2, true);
    REQUIRE(c2.vertex_count() == 2);
    CHECK(c2.edge_count() == 2);
    CHECK(c2.has_edge(0, 1));
    CHECK(c2.has_edge(1, 0));
}

TEST_CASE("count_torus") {
    CHECK(count_torus(fixture::stripes(), 1, 1) == 4);
    CHECK(count_torus(fixture::stripes(), 4, 4) == 4);
    CHECK(count_torus(fixture::checkerboard(), 2, 2) == 2);
    CHECK(count_torus(fixture::checkerboard(), 3, 2) == 0);
    for (std::uint64_t seed = 200; seed < 230; ++seed) {
        const auto d = oracle::random_dominoes(2, seed);
        const TileSet ts = fixture::from_dominoes(d);
        for (int p = 1; p <= 3; ++p)
            for (int q = 1; q <= 3; ++q) CHECK(count_torus(ts, p, q) == oracle::count_torus_blocks(d, p, q));
    }
}
