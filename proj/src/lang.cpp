#include "tilings/lang.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "rect_search.hpp"

namespace tilings {

std::vector<Pattern> admissible_squares(const TileSet& ts, int n) {
    if (n < 1) throw UsageError("square size must be at least 1");
    detail::RectSearch search(ts, n, n, false, false);
    std::vector<Pattern> out;
    search.run([&](const std::vector<State>& grid) {
        out.push_back(Pattern::from_grid(ts.alphabet(), n, n, grid));
        return true;
    });
    return out;
}

bool has_admissible_square(const TileSet& ts, int n) {
    if (n < 1) throw UsageError("square size must be at least 1");
    detail::RectSearch search(ts, n, n, false, false);
    return search.exists();
}

std::vector<Pattern> extensible_squares(const TileSet& ts, int n, int margin) {
    if (n < 1) throw UsageError("square size must be at least 1");
    if (margin < 0) throw UsageError("margin must be nonnegative");
    auto squares = admissible_squares(ts, n);
    if (margin == 0) return squares;
    const int big = n + 2 * margin;
    detail::RectSearch search(ts, big, big, false, false);
    std::vector<Pattern> out;
    for (Pattern& p : squares) {
        search.clear_fixed();
        for (const auto& [pos, s] : p.cells()) search.fix(pos.x + margin, pos.y + margin, s);
        if (search.exists()) out.push_back(std::move(p));
    }
    return out;
}

// ---------------------------------------------------------------------------

std::size_t TransferGraph::edge_count() const {
    std::size_t e = 0;
    for (const auto& s : successors) e += s.size();
    return e;
}

bool TransferGraph::has_edge(std::uint32_t u, std::uint32_t v) const {
    const auto& s = successors.at(u);
    return std::binary_search(s.begin(), s.end(), v);
}

std::vector<State> TransferGraph::last_column(std::uint32_t v) const {
    const auto& data = vertices.at(v);
    auto start = data.begin() + static_cast<std::ptrdiff_t>(columns - 1) * height;
    return {start, start + height};
}

TransferGraph build_transfer_graph(const TileSet& ts, int q, bool wrap) {
    if (q < 1) throw UsageError("strip height must be at least 1");
    TransferGraph g;
    g.height = q;
    g.wrap = wrap;
    g.columns = std::max(ts.max_width() - 1, 1);

    detail::RectSearch vertex_search(ts, g.columns, q, false, wrap);
    vertex_search.run([&](const std::vector<State>& grid) {
        g.vertices.push_back(grid);
        return true;
    });
    g.successors.resize(g.vertices.size());

    // Group vertices by their leading columns so that only overlap-consistent
    // pairs are examined.
    const auto overlap = static_cast<std::ptrdiff_t>(g.columns - 1) * q;
    std::map<std::vector<State>, std::vector<std::uint32_t>> by_prefix;
    for (std::uint32_t v = 0; v < g.vertices.size(); ++v) {
        const auto& d = g.vertices[v];
        by_prefix[std::vector<State>(d.begin(), d.begin() + overlap)].push_back(v);
    }

    detail::RectSearch strip(ts, g.columns + 1, q, false, wrap);
    std::vector<State> merged(static_cast<std::size_t>(g.columns + 1) * q);
    for (std::uint32_t u = 0; u < g.vertices.size(); ++u) {
        const auto& du = g.vertices[u];
        std::vector<State> suffix(du.begin() + q, du.end());
        auto it = by_prefix.find(suffix);
        if (it == by_prefix.end()) continue;
        for (std::uint32_t v : it->second) {
            std::copy(du.begin(), du.end(), merged.begin());
            auto col = g.last_column(v);
            std::copy(col.begin(), col.end(), merged.begin() + static_cast<std::ptrdiff_t>(g.columns) * q);
            if (strip.valid(merged)) g.successors[u].push_back(v);
        }
        std::sort(g.successors[u].begin(), g.successors[u].end());
    }
    return g;
}

std::uint64_t count_torus(const TileSet& ts, int p, int q) {
    if (p < 1 || q < 1) throw UsageError("torus periods must be at least 1");
    const TransferGraph g = build_transfer_graph(ts, q, true);
    const std::size_t n = g.vertex_count();
    std::uint64_t total = 0;
    std::vector<std::uint64_t> cur(n), next(n);
    for (std::size_t start = 0; start < n; ++start) {
        std::fill(cur.begin(), cur.end(), 0);
        cur[start] = 1;
        for (int step = 0; step < p; ++step) {
            std::fill(next.begin(), next.end(), 0);
            for (std::size_t u = 0; u < n; ++u) {
                if (cur[u] == 0) continue;
                for (std::uint32_t v : g.successors[u]) {
                    if (__builtin_add_overflow(next[v], cur[u], &next[v]))
                        throw std::overflow_error("torus count overflows 64 bits");
                }
            }
            std::swap(cur, next);
        }
        if (__builtin_add_overflow(total, cur[start], &total))
            throw std::overflow_error("torus count overflows 64 bits");
    }
    return total;
}

}  // namespace tilings
