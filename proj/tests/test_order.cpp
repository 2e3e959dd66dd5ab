#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "tilings/order.hpp"

using namespace tilings;
using fixture::a_tiling;
using fixture::b_tiling;
using fixture::mono;

namespace {

std::vector<std::string> labels(const TilingFamily& f, const std::vector<std::vector<std::size_t>>& classes) {
    std::vector<std::string> out;
    for (const auto& c : classes) out.push_back(f.member(c[0]).name);
    return out;
}

}  // namespace

TEST_CASE("preceq examples") {
    CHECK(preceq(mono("G"), b_tiling(1), 3));
    CHECK(preceq(b_tiling(1), a_tiling(1), 3));
    CHECK_FALSE(preceq(mono("W"), b_tiling(1), 2));
    CHECK_FALSE(preceq(a_tiling(1), b_tiling(1), 3));
    CHECK_THROWS_AS(preceq(mono("G"), mono("G"), 0), UsageError);
}

TEST_CASE("literal windows undercount large stripes") {
    // at window 6 a white stripe of height 6 looks like the all-white plane
    CHECK(pattern_inclusion(mono("W"), b_tiling(6), 6));
    CHECK_FALSE(preceq(mono("W"), b_tiling(6), 6));
    const auto r = preceq_report(mono("W"), b_tiling(6), 6);
    CHECK(r.window == 8);
    CHECK_FALSE(r.holds);
    CHECK(r.stable);
}

TEST_CASE("family construction") {
    const auto& ts = fixture::stripes();
    CHECK_THROWS_AS(TilingFamily(ts.alphabet(), {{"x", mono("G")}, {"x", mono("W")}}, 3), UsageError);
    CHECK_THROWS_AS(TilingFamily(ts.alphabet(), {{"x", mono("G")}}, 0), UsageError);
    CHECK_THROWS_AS(TilingFamily::validated(ts, {{"bad", fixture::bands(ts, {}, {0}, {"G", "W"})}}, 3),
                    UsageError);
    CHECK_THROWS_AS(TilingFamily::validated(ts, {{"g", mono("G")}}, 1), UsageError);
    const auto f = fixture::stripes_family(2, 4);
    CHECK(f.size() == 15);
    CHECK(f.index_of("B2") == std::optional<std::size_t>{12});
    CHECK(f.subset({12, 0}).member(1).name == "all-red");
}

TEST_CASE("equivalence classes") {
    const auto& ts = fixture::stripes();
    const TilingFamily shifted(ts.alphabet(), {{"g", mono("G")}, {"g2", shift(mono("G"), {2, 9})}}, 3);
    CHECK(equivalence_classes(shifted).size() == 1);
    const TilingFamily ab(ts.alphabet(),
                          {{"a", a_tiling(3)}, {"b", b_tiling(1)}, {"a-moved", shift(a_tiling(3), {-4, 2})}}, 3);
    CHECK(equivalence_classes(ab) == std::vector<std::vector<std::size_t>>{{0, 2}, {1}});
    const TilingFamily bb(ts.alphabet(), {{"B1", b_tiling(1)}, {"B2", b_tiling(2)}}, 3);
    CHECK(equivalence_classes(bb).size() == 2);
    CHECK(equivalence_classes(fixture::stripes_family(6, 6)).size() == 23);
}

TEST_CASE("corpus order at window 6") {
    const auto f = fixture::stripes_family(6, 6);
    const FamilyOrder o(f);
    CHECK(o.stable());
    CHECK(labels(f, minimal_classes(f)) ==
          std::vector<std::string>{"all-red", "all-green", "all-white", "all-black"});
    // the tall white corners of red|(G|W) and red|(W|B) occur in no A_i
    CHECK(labels(f, maximal_classes(f)) ==
          std::vector<std::string>{"red|(G|W)", "red|(W|B)", "A1", "A2", "A3", "A4", "A5", "A6"});

    const auto white = *f.index_of("all-white");
    std::vector<std::string> above;
    for (std::size_t j = 0; j < f.size(); ++j)
        if (o.less(white, j)) above.push_back(f.member(j).name);
    CHECK(above == std::vector<std::string>{"red|W", "G|W", "W|B", "red|(G|W)", "red|(W|B)"});

    const auto d = o.hasse();
    for (int i = 1; i <= 6; ++i) {
        const auto b = o.class_of(*f.index_of("B" + std::to_string(i)));
        const auto a = o.class_of(*f.index_of("A" + std::to_string(i)));
        CHECK(std::count(d.edges.begin(), d.edges.end(), std::pair{b, a}) == 1);
    }
    CHECK(d.edges.size() == 46);
    CHECK(level_of(f, *f.index_of("B1")) == 1);
    CHECK(o.level_of(*f.index_of("A4")) == 2);
    CHECK(o.longest_chain() == 3);
}

TEST_CASE("hasse diagram is the transitive reduction") {
    const auto f = fixture::stripes_family(3, 6);
    const FamilyOrder o(f);
    const auto d = o.hasse();
    const std::size_t k = d.nodes.size();
    std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
    for (const auto& [lo, hi] : d.edges) {
        CHECK(o.class_less(lo, hi));
        reach[lo][hi] = true;
    }
    for (std::size_t m = 0; m < k; ++m)
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b)
                if (reach[a][m] && reach[m][b]) reach[a][b] = true;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) CHECK(reach[a][b] == o.class_less(a, b));
}

TEST_CASE("single member family") {
    const auto& ts = fixture::stripes();
    const TilingFamily one(ts.alphabet(), {{"g", mono("G")}}, 3);
    const auto d = hasse(one);
    CHECK(d.nodes.size() == 1);
    CHECK(d.edges.empty());
    CHECK(level_of(one, 0) == 0);
}

TEST_CASE("thread count does not change the order") {
    const auto f = fixture::stripes_family(4, 6);
    const FamilyOrder a(f, 1), b(f, 4);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j) CHECK(a.leq(i, j) == b.leq(i, j));
    CHECK(a.classes() == b.classes());
    CHECK(a.hasse().edges == b.hasse().edges);
}

TEST_CASE("library order agrees with the oracle") {
    for (auto [maxi, window] : {std::pair{6, 6}, std::pair{4, 9}}) {
        const auto f = fixture::stripes_family(maxi, window);
        const FamilyOrder o(f);
        const auto r = oracle::analyze_family(oracle::stripes_family(maxi), window);
        REQUIRE(r.names.size() == f.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            CHECK(r.names[i] == f.member(i).name);
            CHECK(r.level[i] == o.level_of(i));
            for (std::size_t j = 0; j < f.size(); ++j) CHECK(r.leq[i][j] == o.leq(i, j));
        }
    }
}
