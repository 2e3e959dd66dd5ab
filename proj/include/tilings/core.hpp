#pragma once

// Alphabets, plane vectors, patterns, tile-sets and torus tilings.
//
// Coordinates: x grows to the right, y grows upwards. Dense grids are always
// stored column-major, i.e. cell (x, y) of a w x h grid lives at x * h + y.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace tilings {

using State = std::uint8_t;

/// Raised when an operation is called with arguments that violate its contract
/// (mismatched alphabets, empty patterns, out-of-range states...).
class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

constexpr int floor_mod(long long a, long long m) {
    long long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

class Alphabet {
  public:
    explicit Alphabet(std::vector<std::string> tokens);

    std::size_t size() const { return tokens_.size(); }
    const std::string& token(State s) const { return tokens_.at(s); }
    const std::vector<std::string>& tokens() const { return tokens_; }
    std::optional<State> find(std::string_view token) const;

    bool operator==(const Alphabet&) const = default;

  private:
    std::vector<std::string> tokens_;
};

using AlphabetRef = std::shared_ptr<const Alphabet>;

AlphabetRef make_alphabet(std::vector<std::string> tokens);

/// True when both refer to alphabets with the same token list.
bool same_alphabet(const AlphabetRef& a, const AlphabetRef& b);

struct Vec2 {
    int x = 0;
    int y = 0;

    friend constexpr auto operator<=>(const Vec2&, const Vec2&) = default;
    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
};

using Cell = std::pair<Vec2, State>;

/// A finite partial map from cells to states. Cells are kept sorted by
/// position (x first, then y), which also fixes the lexicographic order used
/// for every deterministic listing of patterns.
class Pattern {
  public:
    Pattern() = default;
    Pattern(AlphabetRef alphabet, std::vector<Cell> cells);

    /// Builds a rectangular pattern with lower-left corner at the origin.
    static Pattern from_grid(AlphabetRef alphabet, int width, int height,
                             std::span<const State> column_major);

    const AlphabetRef& alphabet() const { return alphabet_; }
    const std::vector<Cell>& cells() const { return cells_; }
    bool empty() const { return cells_.empty(); }
    std::size_t size() const { return cells_.size(); }

    std::optional<State> at(Vec2 pos) const;
    std::vector<Vec2> domain() const;

    // Bounding box, inclusive. Undefined on the empty pattern.
    Vec2 min_corner() const;
    Vec2 max_corner() const;
    int width() const { return max_corner().x - min_corner().x + 1; }
    int height() const { return max_corner().y - min_corner().y + 1; }
    bool is_rectangle() const { return size() == static_cast<std::size_t>(width()) * height(); }

    Pattern translated(Vec2 t) const;

    friend bool operator==(const Pattern& a, const Pattern& b);
    friend std::strong_ordering operator<=>(const Pattern& a, const Pattern& b) {
        return a.cells_ <=> b.cells_;
    }

  private:
    AlphabetRef alphabet_;
    std::vector<Cell> cells_;
};

/// Allowed patterns for one domain. `domain` is normalized (componentwise
/// minimum at the origin) and sorted; each allowed tuple lists states in
/// domain order.
struct ShapeRule {
    std::vector<Vec2> domain;
    std::vector<std::vector<State>> allowed;

    bool operator==(const ShapeRule&) const = default;
};

class TileSet {
  public:
    TileSet(AlphabetRef alphabet, std::vector<ShapeRule> rules);

    /// Groups patterns by (normalized) domain; each domain becomes a shape
    /// whose allowed set is exactly the listed patterns.
    static TileSet from_allowed(AlphabetRef alphabet, const std::vector<Pattern>& allowed);
    /// Each domain appearing among `forbidden` becomes a shape allowing the
    /// complement of the listed patterns of that domain.
    static TileSet from_forbidden(AlphabetRef alphabet, const std::vector<Pattern>& forbidden);

    const AlphabetRef& alphabet() const { return alphabet_; }
    const std::vector<ShapeRule>& rules() const { return rules_; }
    std::size_t shape_count() const { return rules_.size(); }

    /// Number of patterns of the given shape, |Q|^|D|.
    std::uint64_t universe_size(std::size_t shape) const;
    bool allows(std::size_t shape, std::span<const State> tuple) const;

    /// Checks the shape-window anchored at `anchor`; `cell(Vec2)` reads the
    /// configuration.
    template <class Lookup>
    bool allows_at(std::size_t shape, Vec2 anchor, Lookup&& cell) const {
        const auto& dom = rules_[shape].domain;
        std::uint64_t code = 0;
        std::uint64_t radix = 1;
        for (const Vec2& d : dom) {
            code += radix * static_cast<std::uint64_t>(cell(anchor + d));
            radix *= alphabet_->size();
        }
        return allowed_code(shape, code);
    }

    /// Widest / tallest shape bounding box.
    int max_width() const { return max_width_; }
    int max_height() const { return max_height_; }

    std::vector<Pattern> allowed_patterns(std::size_t shape) const;
    TileSet transposed() const;

    friend bool operator==(const TileSet& a, const TileSet& b) {
        return same_alphabet(a.alphabet_, b.alphabet_) && a.rules_ == b.rules_;
    }

  private:
    struct Lookup {
        std::vector<char> dense;
        std::unordered_set<std::uint64_t> sparse;
    };

    bool allowed_code(std::size_t shape, std::uint64_t code) const {
        const Lookup& l = lookup_[shape];
        if (!l.dense.empty()) return l.dense[code] != 0;
        return l.sparse.contains(code);
    }

    AlphabetRef alphabet_;
    std::vector<ShapeRule> rules_;
    std::vector<Lookup> lookup_;
    int max_width_ = 1;
    int max_height_ = 1;
};

/// Fully periodic tiling with periods (p, 0) and (0, q), given by one block.
struct TorusTiling {
    int p = 1;
    int q = 1;
    std::vector<State> block;  // column-major, size p * q

    State at(long long x, long long y) const {
        return block[static_cast<std::size_t>(floor_mod(x, p)) * q + floor_mod(y, q)];
    }

    bool operator==(const TorusTiling&) const = default;
    auto operator<=>(const TorusTiling&) const = default;
};

bool appears_in(const Pattern& needle, const Pattern& haystack);

Pattern normalize(const Pattern& p);

/// For each shape of `ts` (same order as `ts.rules()`), the patterns of that
/// domain which are not allowed, in lexicographic order.
std::vector<std::vector<Pattern>> to_forbidden(const TileSet& ts);

bool check_torus(const TileSet& ts, const TorusTiling& t);

}  // namespace tilings
