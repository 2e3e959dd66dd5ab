#pragma once

// Bounded search: small periodic tilings, refutation by empty language, and
// weakly periodic witnesses built from pairs of strip cycles.

#include <optional>
#include <variant>
#include <vector>

#include "tilings/core.hpp"
#include "tilings/presentation.hpp"

namespace tilings {

/// Valid torus tilings with p <= maxp and q <= maxq, one per translation
/// orbit (the lexicographically least block), skipping blocks that repeat a
/// smaller torus. Ordered by (max(p, q), p, q, block).
std::vector<TorusTiling> enumerate_torus(const TileSet& ts, int maxp, int maxq);

/// True iff no admissible n x n square exists, which proves that the
/// tile-set tiles nothing.
bool refute(const TileSet& ts, int n);

struct Empty {
    int n;
    bool operator==(const Empty&) const = default;
};
struct PeriodicFound {
    TorusTiling tiling;
    bool operator==(const PeriodicFound&) const = default;
};
struct Unknown {
    int budget;
    bool operator==(const Unknown&) const = default;
};
using ClassifyOutcome = std::variant<Empty, PeriodicFound, Unknown>;

/// Empty(n) for the least n <= budget with an empty language, otherwise the
/// first torus with p, q <= budget in (max(p, q), p, q, block) order,
/// otherwise Unknown.
ClassifyOutcome classify(const TileSet& ts, int budget);

/// Result of a successful witness search, with the strip data it was built
/// from.
struct WeakPeriodicWitness {
    GridPresentation presentation;
    int height;           // strip height q
    bool transposed;      // true when the period is horizontal
    std::vector<std::vector<State>> left_cycle;   // columns, bottom to top
    std::vector<std::vector<State>> right_cycle;  // columns, bottom to top
    std::size_t bridge_length;                    // interior bridge columns
};

struct WitnessOptions {
    /// Cap on the number of simple cycles enumerated per transfer graph.
    std::size_t max_cycles = 100000;
};

/// For q = 1..maxq (vertical period first, then the transposed tile-set),
/// looks for two simple cycles C1, C2 of the wrapped transfer graph with C2
/// reachable from C1 and whose column sequences are not rotations of each
/// other (cyclically or vertically). The witness is C1 repeated on the left,
/// the least shortest connecting path, then C2 repeated on the right.
std::optional<WeakPeriodicWitness> find_weak_periodic_witness(const TileSet& ts, int maxq,
                                                              WitnessOptions options = {});

std::optional<GridPresentation> weak_periodic_witness(const TileSet& ts, int maxq);

}  // namespace tilings
