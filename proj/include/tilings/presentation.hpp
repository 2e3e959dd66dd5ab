#pragma once

// Finite descriptions of infinite tilings and the window semantics computed
// on them: pattern sets, occurrence counts, validity, period lattices and the
// type a / type b classification.
//
// A grid presentation cuts the plane by finitely many vertical lines (xcuts)
// and horizontal lines (ycuts). Band i along an axis is [c_i, c_{i+1}) with
// c_0 = -inf and c_{r+1} = +inf. Each region (product of one x band and one y
// band) is filled by a periodic block anchored at the origin: cell (x, y)
// reads data[x mod u][y mod v] whatever the region's position.

#include <cstdint>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "tilings/core.hpp"

namespace tilings {

struct Block {
    int u = 1;
    int v = 1;
    std::vector<State> data;  // column-major, u * v

    State at(long long x, long long y) const {
        return data[static_cast<std::size_t>(floor_mod(x, u)) * v + floor_mod(y, v)];
    }

    static Block constant(State s) { return Block{1, 1, {s}}; }

    bool operator==(const Block&) const = default;
};

class GridPresentation {
  public:
    /// `regions` is indexed ix * (ycuts.size() + 1) + iy.
    GridPresentation(AlphabetRef alphabet, std::vector<int> xcuts, std::vector<int> ycuts,
                     std::vector<Block> regions);

    static GridPresentation uniform(AlphabetRef alphabet, Block block);

    const AlphabetRef& alphabet() const { return alphabet_; }
    const std::vector<int>& xcuts() const { return xcuts_; }
    const std::vector<int>& ycuts() const { return ycuts_; }
    const std::vector<Block>& regions() const { return regions_; }
    const Block& region(std::size_t ix, std::size_t iy) const {
        return regions_[ix * (ycuts_.size() + 1) + iy];
    }

    State cell_at(Vec2 pos) const;

    /// lcm of all horizontal (resp. vertical) block periods.
    int period_x() const { return period_x_; }
    int period_y() const { return period_y_; }
    int span_x() const { return xcuts_.empty() ? 0 : xcuts_.back() - xcuts_.front(); }
    int span_y() const { return ycuts_.empty() ? 0 : ycuts_.back() - ycuts_.front(); }

    /// Window size from which the presentation's pattern language carries
    /// all of its structure: max(span_x + period_x, span_y + period_y) + 1.
    int structural_bound() const;

    /// Same configuration with redundant cuts removed.
    GridPresentation simplified() const;
    /// Mirror through the diagonal: cell (x, y) of the result is cell (y, x).
    GridPresentation transposed() const;

    friend bool operator==(const GridPresentation& a, const GridPresentation& b) {
        return same_alphabet(a.alphabet_, b.alphabet_) && a.xcuts_ == b.xcuts_ &&
               a.ycuts_ == b.ycuts_ && a.regions_ == b.regions_;
    }

  private:
    AlphabetRef alphabet_;
    std::vector<int> xcuts_;
    std::vector<int> ycuts_;
    std::vector<Block> regions_;
    int period_x_ = 1;
    int period_y_ = 1;
};

struct PeriodLattice {
    int rank = 0;
    /// Hermite form: rank 2 gives (a, b), (0, d) with a, d > 0 and 0 <= b < d;
    /// rank 1 gives one vector whose first nonzero coordinate is positive.
    std::vector<Vec2> generators;

    bool contains(Vec2 v) const;
    bool operator==(const PeriodLattice&) const = default;
};

/// Builds the canonical basis of the lattice generated by `vectors`.
PeriodLattice lattice_from(const std::vector<Vec2>& vectors);

struct Occurrences {
    enum class Kind { Zero, Finite, Infinite };
    Kind kind = Kind::Zero;
    std::size_t count = 0;  // meaningful for Finite only

    static Occurrences zero() { return {Kind::Zero, 0}; }
    static Occurrences finite(std::size_t k) { return {Kind::Finite, k}; }
    static Occurrences infinite() { return {Kind::Infinite, 0}; }
    bool operator==(const Occurrences&) const = default;
};

struct TypeA {
    bool operator==(const TypeA&) const = default;
};
struct TypeB {
    Pattern witness;  // occurs exactly once
    bool operator==(const TypeB&) const = default;
};
using TilingType = std::variant<TypeA, TypeB>;

inline State cell_at(const GridPresentation& g, Vec2 pos) { return g.cell_at(pos); }

/// n x n window with lower-left corner at `corner`, normalized.
Pattern window_at(const GridPresentation& g, Vec2 corner, int n);
/// w x h window with lower-left corner at `corner`, normalized.
Pattern window_at(const GridPresentation& g, Vec2 corner, int w, int h);

/// All n x n patterns occurring anywhere in g, in lexicographic order.
std::vector<Pattern> pattern_set(const GridPresentation& g, int n);

Occurrences occurrences(const GridPresentation& g, const Pattern& p);

bool is_valid(const GridPresentation& g, const TileSet& ts);

PeriodLattice period_lattice(const GridPresentation& g);

TilingType type_of(const GridPresentation& g);

bool equal(const GridPresentation& a, const GridPresentation& b);

/// cell_at(shift(g, v), x) == cell_at(g, x + v).
GridPresentation shift(const GridPresentation& g, Vec2 v);

// ---------------------------------------------------------------------------
// Lower-level scanning used by the order and Cantor-Bendixson modules.

/// A rectangular window encoded as its column-major states.
using WindowKey = std::string;
using WindowSet = std::unordered_set<WindowKey>;

/// Keys of every w x h window of g. The corner scan covers
/// [c_1 - w - P, c_r + P] along each cut axis (one period per axis
/// otherwise), widened by `extra_margin` on both sides.
WindowSet window_keys(const GridPresentation& g, int w, int h, int extra_margin = 0);

Pattern pattern_from_key(const AlphabetRef& alphabet, int w, int h, const WindowKey& key);

/// One representative occurrence of a pattern. When `recurs_x` is set the
/// occurrence repeats under translation by (period_x, 0) in one direction
/// (both directions if the axis has no cuts); likewise for y.
struct Occurrence {
    Vec2 offset;  // translation mapping the normalized pattern onto g
    bool recurs_x = false;
    bool recurs_y = false;
};

/// Representatives of all occurrence classes of p (p is normalized first).
std::vector<Occurrence> scan_occurrences(const GridPresentation& g, const Pattern& p);

}  // namespace tilings
