#pragma once

// Pattern languages of tile-sets: locally admissible and extensible squares,
// the column transfer graph and torus counting.

#include <cstdint>
#include <vector>

#include "tilings/core.hpp"

namespace tilings {

/// n x n patterns in which every fully contained shape-window is allowed,
/// in lexicographic (column-major) order.
std::vector<Pattern> admissible_squares(const TileSet& ts, int n);

/// True iff at least one admissible n x n square exists.
bool has_admissible_square(const TileSet& ts, int n);

/// Admissible n x n squares that sit at the centre of some admissible
/// (n + 2m) x (n + 2m) square.
std::vector<Pattern> extensible_squares(const TileSet& ts, int n, int margin);

/// Strip automaton: vertices are admissible stacks of `columns` adjacent
/// columns of height `height`; an edge u -> v exists when v continues u by one
/// column and the merged strip is admissible. Bi-infinite walks are exactly
/// the tilings of Z x [0, height) (cyclic in y when `wrap`).
struct TransferGraph {
    int height = 1;
    bool wrap = true;
    int columns = 1;
    std::vector<std::vector<State>> vertices;  // column-major, columns * height
    std::vector<std::vector<std::uint32_t>> successors;  // sorted

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t edge_count() const;
    bool has_edge(std::uint32_t u, std::uint32_t v) const;
    /// The column a walk emits when it steps onto `v`.
    std::vector<State> last_column(std::uint32_t v) const;
};

TransferGraph build_transfer_graph(const TileSet& ts, int q, bool wrap);

/// Number of p x q blocks valid under wraparound (not deduplicated), counted
/// as closed walks of length p in the wrapped transfer graph of height q.
/// Throws std::overflow_error if the count does not fit in 64 bits.
std::uint64_t count_torus(const TileSet& ts, int p, int q);

}  // namespace tilings
