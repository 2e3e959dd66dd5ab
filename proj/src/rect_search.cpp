#include "rect_search.hpp"

#include <algorithm>

namespace tilings::detail {

RectSearch::RectSearch(const TileSet& ts, int width, int height, bool wrap_x, bool wrap_y)
    : ts_(&ts),
      width_(width),
      height_(height),
      cells_(static_cast<std::size_t>(width) * height),
      states_(ts.alphabet()->size()),
      fixed_(cells_, -1),
      checks_(cells_) {
    if (width < 1 || height < 1) throw UsageError("rectangle dimensions must be positive");
    for (std::uint32_t s = 0; s < ts.shape_count(); ++s) {
        const auto& dom = ts.rules()[s].domain;
        int sw = 0, sh = 0;
        for (const Vec2& d : dom) {
            sw = std::max(sw, d.x + 1);
            sh = std::max(sh, d.y + 1);
        }
        const int ax_end = wrap_x ? width : width - sw + 1;
        const int ay_end = wrap_y ? height : height - sh + 1;
        for (int ax = 0; ax < ax_end; ++ax) {
            for (int ay = 0; ay < ay_end; ++ay) {
                Placement p{s, {}};
                std::uint32_t last = 0;
                for (const Vec2& d : dom) {
                    int x = floor_mod(ax + d.x, width);
                    int y = floor_mod(ay + d.y, height);
                    auto idx = static_cast<std::uint32_t>(index(x, y));
                    p.cells.push_back(idx);
                    last = std::max(last, idx);
                }
                checks_[last].push_back(std::move(p));
            }
        }
    }
}

bool RectSearch::placement_ok(const Placement& p, const std::vector<State>& grid) const {
    State tuple[64];
    std::vector<State> big;
    State* out = tuple;
    if (p.cells.size() > 64) {
        big.resize(p.cells.size());
        out = big.data();
    }
    for (std::size_t k = 0; k < p.cells.size(); ++k) out[k] = grid[p.cells[k]];
    return ts_->allows(p.shape, std::span<const State>(out, p.cells.size()));
}

bool RectSearch::valid(const std::vector<State>& grid) const {
    if (grid.size() != cells_) return false;
    for (const auto& list : checks_)
        for (const Placement& p : list)
            if (!placement_ok(p, grid)) return false;
    return true;
}

}  // namespace tilings::detail
