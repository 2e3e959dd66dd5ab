#pragma once

// Isolated members, the topological derivative and Cantor-Bendixson ranks of
// a finite presented family.
//
// A member x is isolated when some rectangular pattern P of x occurs in no
// member outside x's equivalence class, and all occurrences of P in x are
// translates of each other by periods of x. Patterns are searched up to the
// effective window max(n, bound(x)).

#include <cstddef>
#include <optional>
#include <vector>

#include "tilings/core.hpp"
#include "tilings/order.hpp"

namespace tilings {

/// Smallest isolating rectangle of member `x`, ordered by (area, width,
/// height) and then by column-major contents.
std::optional<Pattern> isolating_pattern(const TilingFamily& f, std::size_t x);

/// The members of f without an isolating pattern, in family order.
TilingFamily derivative(const TilingFamily& f);

struct RankReport {
    std::vector<std::optional<int>> rank;          // per member; empty = unranked
    std::vector<std::vector<std::size_t>> layers;  // members removed by each derivative
    int family_rank = 0;
    std::vector<std::size_t> residue;  // members never isolated
};

RankReport ranks(const TilingFamily& f);

}  // namespace tilings
