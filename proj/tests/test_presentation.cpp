#include <doctest.h>

#include "fixtures.hpp"
#include "tilings/presentation.hpp"

using namespace tilings;
using fixture::a_tiling;
using fixture::b_tiling;
using fixture::mono;
using fixture::red_left;
using fixture::st;

namespace {

State S(const char* tok) { return st(fixture::stripes(), tok); }

}  // namespace

TEST_CASE("presentation construction checks its input") {
    auto a = fixture::stripes().alphabet();
    CHECK_THROWS_AS(GridPresentation(a, {3, 1}, {}, {Block::constant(0), Block::constant(0), Block::constant(0)}),
                    UsageError);
    CHECK_THROWS_AS(GridPresentation(a, {0}, {}, {Block::constant(0)}), UsageError);
    CHECK_THROWS_AS(GridPresentation(a, {}, {}, {Block{2, 1, {0}}}), UsageError);
    CHECK_THROWS_AS(GridPresentation(a, {}, {}, {Block::constant(7)}), UsageError);
}

TEST_CASE("cell_at and window_at") {
    CHECK(mono("G").cell_at({17, -3}) == S("G"));
    const auto a2 = a_tiling(2);
    CHECK(a2.cell_at({-1, 5}) == S("R"));
    CHECK(a2.cell_at({3, 1}) == S("W"));
    CHECK(a2.cell_at({3, 2}) == S("G"));
    CHECK(a2.cell_at({0, -1}) == S("B"));

    const Pattern w = window_at(a2, {-1, -1}, 2);
    CHECK(w.at({0, 0}) == S("R"));
    CHECK(w.at({0, 1}) == S("R"));
    CHECK(w.at({1, 0}) == S("B"));
    CHECK(w.at({1, 1}) == S("W"));

    const Pattern b = window_at(b_tiling(1), {0, -1}, 3);
    for (int x = 0; x < 3; ++x) {
        CHECK(b.at({x, 0}) == S("B"));
        CHECK(b.at({x, 1}) == S("W"));
        CHECK(b.at({x, 2}) == S("G"));
    }

    const Pattern g = window_at(mono("G"), {40, -2}, 2);
    CHECK(g.size() == 4);
    for (const auto& [pos, s] : g.cells()) CHECK(s == S("G"));
}

TEST_CASE("periodic blocks are anchored at the origin") {
    const auto& cb = fixture::checkerboard();
    const auto g = GridPresentation::uniform(cb.alphabet(), Block{2, 2, {0, 1, 1, 0}});
    CHECK(g.cell_at({0, 0}) == 0);
    CHECK(g.cell_at({-1, 0}) == 1);
    CHECK(g.cell_at({-3, -3}) == 0);
    CHECK(is_valid(g, cb));
    CHECK(pattern_set(g, 3).size() == 2);
}

TEST_CASE("pattern_set") {
    CHECK(pattern_set(mono("G"), 3).size() == 1);
    CHECK(pattern_set(b_tiling(1), 1).size() == 3);
    CHECK(pattern_set(a_tiling(2), 1).size() == 4);
    // columns of B_2 seen through a 2 x 2 window: BB, BW, WW, WG, GG
    CHECK(pattern_set(b_tiling(2), 2).size() == 5);
}

TEST_CASE("occurrences") {
    CHECK(occurrences(mono("G"), window_at(mono("G"), {0, 0}, 1)) == Occurrences::infinite());
    const auto a2 = a_tiling(2);
    const Pattern corner = window_at(a2, {-1, -1}, 2, 4);
    CHECK(corner.at({0, 3}) == S("R"));
    CHECK(corner.at({1, 0}) == S("B"));
    CHECK(corner.at({1, 1}) == S("W"));
    CHECK(corner.at({1, 2}) == S("W"));
    CHECK(corner.at({1, 3}) == S("G"));
    CHECK(occurrences(a2, corner) == Occurrences::finite(1));
    auto a = fixture::stripes().alphabet();
    CHECK(occurrences(b_tiling(1), Pattern(a, {{{0, 0}, S("R")}})) == Occurrences::zero());
    // the R|W boundary column of A_2 occurs twice
    CHECK(occurrences(a2, window_at(a2, {-1, 0}, 2, 1)) == Occurrences::finite(2));
}

TEST_CASE("is_valid") {
    const auto& ts = fixture::stripes();
    CHECK(is_valid(mono("G"), ts));
    CHECK(is_valid(b_tiling(1), ts));
    CHECK(is_valid(a_tiling(5), ts));
    CHECK_FALSE(is_valid(fixture::bands(ts, {}, {0}, {"G", "W"}), ts));
    CHECK_FALSE(is_valid(fixture::bands(ts, {0}, {}, {"G", "R"}), ts));
    CHECK_THROWS_AS(is_valid(mono("G"), fixture::checkerboard()), UsageError);
}

TEST_CASE("period lattices") {
    const auto full = period_lattice(mono("G"));
    CHECK(full.rank == 2);
    CHECK(full.generators == std::vector<Vec2>{{1, 0}, {0, 1}});
    const auto one = period_lattice(red_left("G"));
    CHECK(one.rank == 1);
    CHECK(one.generators == std::vector<Vec2>{{0, 1}});
    CHECK(period_lattice(a_tiling(2)).rank == 0);
    CHECK(period_lattice(b_tiling(3)).generators == std::vector<Vec2>{{1, 0}});

    const auto cb = GridPresentation::uniform(fixture::checkerboard().alphabet(), Block{2, 2, {0, 1, 1, 0}});
    const auto diag = period_lattice(cb);
    CHECK(diag.rank == 2);
    CHECK(diag.contains({1, 1}));
    CHECK(diag.contains({1, -1}));
    CHECK_FALSE(diag.contains({1, 0}));
}

TEST_CASE("lattice_from gives a canonical basis") {
    CHECK(lattice_from({{2, 0}, {0, 3}, {4, 6}}) == lattice_from({{0, 3}, {2, 3}}));
    CHECK(lattice_from({}).rank == 0);
    const auto l = lattice_from({{-2, -4}, {3, 6}});
    CHECK(l.rank == 1);
    CHECK(l.generators == std::vector<Vec2>{{1, 2}});
}

TEST_CASE("type_of") {
    CHECK(std::holds_alternative<TypeA>(type_of(mono("G"))));
    CHECK(std::holds_alternative<TypeA>(type_of(red_left("G"))));
    CHECK(std::holds_alternative<TypeA>(type_of(b_tiling(4))));
    const auto t = type_of(a_tiling(2));
    REQUIRE(std::holds_alternative<TypeB>(t));
    const Pattern& w = std::get<TypeB>(t).witness;
    CHECK(w == window_at(a_tiling(2), {-1, -1}, 2, 4));
}

TEST_CASE("equal and shift") {
    CHECK(equal(mono("G"), shift(mono("G"), {3, 5})));
    CHECK_FALSE(equal(b_tiling(1), shift(b_tiling(1), {0, 1})));
    CHECK(equal(b_tiling(1), shift(b_tiling(1), {7, 0})));
    const auto a3 = a_tiling(3);
    const auto moved = shift(a3, {2, -5});
    for (int x = -6; x <= 6; ++x)
        for (int y = -6; y <= 6; ++y) CHECK(moved.cell_at({x, y}) == a3.cell_at({x + 2, y - 5}));
    CHECK(equal(shift(moved, {-2, 5}), a3));
}

TEST_CASE("simplified and transposed") {
    const auto& ts = fixture::stripes();
    const auto redundant = fixture::bands(ts, {0, 4}, {}, {"R", "G", "G"});
    CHECK(redundant.simplified() == red_left("G"));
    CHECK(equal(redundant, red_left("G")));
    const auto t = a_tiling(2).transposed();
    CHECK(t.cell_at({1, 3}) == a_tiling(2).cell_at({3, 1}));
    CHECK(t.transposed() == a_tiling(2));
}

TEST_CASE("structural bound") {
    CHECK(mono("G").structural_bound() == 2);
    CHECK(a_tiling(6).structural_bound() == 8);
    const auto cb = GridPresentation::uniform(fixture::checkerboard().alphabet(), Block{2, 2, {0, 1, 1, 0}});
    CHECK(cb.structural_bound() == 3);
}
