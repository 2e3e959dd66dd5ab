#pragma once

// Backtracking fill of a w x h rectangle under the window constraints of a
// tile-set. Cells are filled column-major with alphabet-order branching, so
// solutions come out in lexicographic order of their column-major data.

#include <cstdint>
#include <vector>

#include "tilings/core.hpp"

namespace tilings::detail {

class RectSearch {
  public:
    /// Windows wrap around in x (resp. y) when `wrap_x` (resp. `wrap_y`) is
    /// set; otherwise only windows lying fully inside the rectangle count.
    RectSearch(const TileSet& ts, int width, int height, bool wrap_x, bool wrap_y);

    void fix(int x, int y, State s) { fixed_[index(x, y)] = s; }
    void clear_fixed() { fixed_.assign(fixed_.size(), -1); }

    /// Calls `visit(grid)` on every solution until it returns false. Returns
    /// false iff the visitor stopped the search.
    template <class Visit>
    bool run(Visit&& visit) {
        grid_.assign(cells_, 0);
        return descend(0, visit);
    }

    bool exists() {
        bool found = false;
        run([&](const std::vector<State>&) {
            found = true;
            return false;
        });
        return found;
    }

    /// Full check of a complete grid.
    bool valid(const std::vector<State>& grid) const;

    int width() const { return width_; }
    int height() const { return height_; }

  private:
    struct Placement {
        std::uint32_t shape;
        std::vector<std::uint32_t> cells;
    };

    std::size_t index(int x, int y) const { return static_cast<std::size_t>(x) * height_ + y; }
    bool placement_ok(const Placement& p, const std::vector<State>& grid) const;

    template <class Visit>
    bool descend(std::size_t i, Visit& visit) {
        if (i == cells_) return visit(static_cast<const std::vector<State>&>(grid_));
        const int lo = fixed_[i] >= 0 ? fixed_[i] : 0;
        const int hi = fixed_[i] >= 0 ? fixed_[i] + 1 : static_cast<int>(states_);
        for (int s = lo; s < hi; ++s) {
            grid_[i] = static_cast<State>(s);
            bool ok = true;
            for (const Placement& p : checks_[i]) {
                if (!placement_ok(p, grid_)) {
                    ok = false;
                    break;
                }
            }
            if (ok && !descend(i + 1, visit)) return false;
        }
        return true;
    }

    const TileSet* ts_;
    int width_;
    int height_;
    std::size_t cells_;
    std::size_t states_;
    std::vector<int> fixed_;
    std::vector<std::vector<Placement>> checks_;
    std::vector<State> grid_;
};

}  // namespace tilings::detail
