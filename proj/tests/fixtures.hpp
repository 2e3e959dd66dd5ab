#pragma once

// Shared tile-sets and tilings for the test binaries.

#include <filesystem>
#include <string>
#include <vector>

#include "brute.hpp"
#include "tilings/core.hpp"
#include "tilings/io.hpp"
#include "tilings/order.hpp"
#include "tilings/presentation.hpp"

namespace fixture {

using namespace tilings;

inline std::filesystem::path corpus() { return TILINGS_CORPUS_DIR; }

inline const TileSet& stripes() {
    static const TileSet ts = parse_tileset(corpus() / "stripes.tiles");
    return ts;
}

inline const TileSet& checkerboard() {
    static const TileSet ts = parse_tileset(corpus() / "checkerboard.tiles");
    return ts;
}

inline State st(const TileSet& ts, const std::string& tok) { return *ts.alphabet()->find(tok); }

/// Constant-region presentation. `fill` lists one token per region in
/// region order (ix major, iy minor).
inline GridPresentation bands(const TileSet& ts, std::vector<int> xcuts, std::vector<int> ycuts,
                              const std::vector<std::string>& fill) {
    std::vector<Block> regions;
    for (const auto& tok : fill) regions.push_back(Block::constant(st(ts, tok)));
    return GridPresentation(ts.alphabet(), std::move(xcuts), std::move(ycuts), std::move(regions));
}

inline GridPresentation mono(const std::string& tok) { return bands(stripes(), {}, {}, {tok}); }
inline GridPresentation red_left(const std::string& tok) { return bands(stripes(), {0}, {}, {"R", tok}); }
inline GridPresentation b_tiling(int i) { return bands(stripes(), {}, {0, i}, {"B", "W", "G"}); }
inline GridPresentation a_tiling(int i) {
    return bands(stripes(), {0}, {0, i}, {"R", "R", "R", "B", "W", "G"});
}

/// Monochromes, the seven named classes, B_1..B_maxi, A_1..A_maxi; the same
/// order as the committed corpus directory.
inline TilingFamily stripes_family(int maxi, int window) {
    const TileSet& ts = stripes();
    std::vector<NamedTiling> m{
        {"all-red", mono("R")},
        {"all-green", mono("G")},
        {"all-white", mono("W")},
        {"all-black", mono("B")},
        {"red|G", red_left("G")},
        {"red|W", red_left("W")},
        {"red|B", red_left("B")},
        {"G|W", bands(ts, {}, {0}, {"W", "G"})},
        {"W|B", bands(ts, {}, {0}, {"B", "W"})},
        {"red|(G|W)", bands(ts, {0}, {0}, {"R", "R", "W", "G"})},
        {"red|(W|B)", bands(ts, {0}, {0}, {"R", "R", "B", "W"})},
    };
    for (int i = 1; i <= maxi; ++i) m.push_back({"B" + std::to_string(i), b_tiling(i)});
    for (int i = 1; i <= maxi; ++i) m.push_back({"A" + std::to_string(i), a_tiling(i)});
    return TilingFamily::validated(ts, std::move(m), window);
}

/// Library tile-set with the same rules as an oracle domino set.
inline TileSet from_dominoes(const oracle::Dominoes& d) {
    std::vector<std::string> tokens;
    for (int s = 0; s < d.q; ++s) tokens.push_back(std::string(1, static_cast<char>('a' + s)));
    auto alphabet = make_alphabet(tokens);
    ShapeRule h{{{0, 0}, {1, 0}}, {}};
    ShapeRule v{{{0, 0}, {0, 1}}, {}};
    for (int a = 0; a < d.q; ++a)
        for (int b = 0; b < d.q; ++b) {
            if (d.h[a][b]) h.allowed.push_back({static_cast<State>(a), static_cast<State>(b)});
            // tuple order follows the domain: bottom cell first
            if (d.v[a][b]) v.allowed.push_back({static_cast<State>(b), static_cast<State>(a)});
        }
    return TileSet(alphabet, {h, v});
}

}  // namespace fixture
