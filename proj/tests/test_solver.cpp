#include <doctest.h>

#include "fixtures.hpp"
#include "tilings/lang.hpp"
#include "tilings/solver.hpp"

using namespace tilings;
using fixture::st;

TEST_CASE("enumerate_torus") {
    const auto& ts = fixture::stripes();
    const auto s = enumerate_torus(ts, 4, 4);
    REQUIRE(s.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(s[i].p == 1);
        CHECK(s[i].q == 1);
        CHECK(s[i].block[0] == static_cast<State>(i));
    }
    const auto cb = enumerate_torus(fixture::checkerboard(), 2, 2);
    REQUIRE(cb.size() == 1);
    CHECK(cb[0].p == 2);
    CHECK(cb[0].q == 2);
    CHECK(cb[0].at(0, 0) == 0);
    CHECK(cb[0].at(1, 0) == 1);
    CHECK(cb[0].at(0, 1) == 1);
    CHECK(enumerate_torus(fixture::checkerboard(), 1, 1).empty());
    CHECK(enumerate_torus(fixture::checkerboard(), 4, 4).size() == 1);
    CHECK_THROWS_AS(enumerate_torus(ts, 0, 1), UsageError);
}

TEST_CASE("enumerate_torus matches the brute-force class count") {
    for (std::uint64_t seed = 300; seed < 340; ++seed) {
        const auto d = oracle::random_dominoes(2, seed);
        const TileSet ts = fixture::from_dominoes(d);
        const auto found = enumerate_torus(ts, 3, 3);
        CHECK(found.size() == oracle::torus_classes(d, 3, 3).size());
        for (const auto& t : found) CHECK(check_torus(ts, t));
    }
}

TEST_CASE("refute") {
    CHECK_FALSE(refute(fixture::stripes(), 5));
    auto a = make_alphabet({"a"});
    CHECK(refute(TileSet::from_forbidden(a, {Pattern(a, {{{0, 0}, 0}})}), 1));
    auto ab = make_alphabet({"a", "b"});
    TileSet row_only(ab, {ShapeRule{{{0, 0}, {1, 0}}, {{0, 1}}},
                          ShapeRule{{{0, 0}, {0, 1}}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}}});
    CHECK_FALSE(refute(row_only, 2));
    CHECK(refute(row_only, 3));
}

TEST_CASE("classify") {
    const auto c = classify(fixture::checkerboard(), 2);
    REQUIRE(std::holds_alternative<PeriodicFound>(c));
    const auto& t = std::get<PeriodicFound>(c).tiling;
    CHECK(t.p == 2);
    CHECK(t.q == 2);
    CHECK(t.at(0, 0) == 0);
    CHECK(t.at(1, 0) == 1);

    auto one = make_alphabet({"x"});
    const TileSet trivial = TileSet::from_allowed(one, {Pattern(one, {{{0, 0}, 0}})});
    CHECK(classify(trivial, 1) == ClassifyOutcome{PeriodicFound{{1, 1, {0}}}});

    const auto s = classify(fixture::stripes(), 1);
    CHECK(s == ClassifyOutcome{PeriodicFound{{1, 1, {st(fixture::stripes(), "R")}}}});

    auto ab = make_alphabet({"a", "b"});
    TileSet row_only(ab, {ShapeRule{{{0, 0}, {1, 0}}, {{0, 1}}},
                          ShapeRule{{{0, 0}, {0, 1}}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}}});
    CHECK(classify(row_only, 2) == ClassifyOutcome{Unknown{2}});
    CHECK(classify(row_only, 3) == ClassifyOutcome{Empty{3}});
    CHECK(classify(row_only, 6) == ClassifyOutcome{Empty{3}});
}

TEST_CASE("weak periodic witness") {
    const auto& ts = fixture::stripes();
    const auto w = find_weak_periodic_witness(ts, 1);
    REQUIRE(w.has_value());
    CHECK_FALSE(w->transposed);
    CHECK(is_valid(w->presentation, ts));
    const auto lattice = period_lattice(w->presentation);
    CHECK(lattice.rank == 1);
    CHECK(lattice.generators == std::vector<Vec2>{{0, 1}});
    CHECK(w->presentation.cell_at({-100, 0}) == st(ts, "R"));
    CHECK(w->presentation.cell_at({100, 0}) == st(ts, "G"));

    CHECK_FALSE(weak_periodic_witness(fixture::checkerboard(), 2).has_value());
    auto one = make_alphabet({"x"});
    const TileSet trivial = TileSet::from_allowed(one, {Pattern(one, {{{0, 0}, 0}})});
    CHECK_FALSE(weak_periodic_witness(trivial, 1).has_value());
}

TEST_CASE("weak periodic witness with a horizontal period") {
    // colour may change only upwards, from a to b
    auto ab = make_alphabet({"a", "b"});
    const TileSet ts(ab, {ShapeRule{{{0, 0}, {1, 0}}, {{0, 0}, {1, 1}}},
                          ShapeRule{{{0, 0}, {0, 1}}, {{0, 0}, {1, 1}, {0, 1}}}});
    const auto w = find_weak_periodic_witness(ts, 1);
    REQUIRE(w.has_value());
    CHECK(w->transposed);
    CHECK(is_valid(w->presentation, ts));
    CHECK(period_lattice(w->presentation).generators == std::vector<Vec2>{{1, 0}});
    CHECK(w->presentation.cell_at({0, -50}) == 0);
    CHECK(w->presentation.cell_at({0, 50}) == 1);
}

TEST_CASE("witnesses on random tile-sets are sound") {
    int found = 0;
    for (std::uint64_t seed = 400; seed < 460; ++seed) {
        const TileSet ts = fixture::from_dominoes(oracle::random_dominoes(3, seed));
        const auto w = find_weak_periodic_witness(ts, 2);
        if (!w) continue;
        ++found;
        CHECK(is_valid(w->presentation, ts));
        CHECK(period_lattice(w->presentation).rank == 1);
    }
    CHECK(found > 0);
}
