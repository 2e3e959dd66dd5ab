#include "tilings/solver.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "rect_search.hpp"
#include "tilings/lang.hpp"

namespace tilings {

namespace {

// Smallest d | p with columns repeating every d.
bool has_smaller_period(const std::vector<State>& block, int p, int q, bool horizontal) {
    const int n = horizontal ? p : q;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool periodic = true;
        for (int x = 0; x < p && periodic; ++x)
            for (int y = 0; y < q && periodic; ++y) {
                const int x2 = horizontal ? (x + d) % p : x;
                const int y2 = horizontal ? y : (y + d) % q;
                periodic = block[static_cast<std::size_t>(x) * q + y] ==
                           block[static_cast<std::size_t>(x2) * q + y2];
            }
        if (periodic) return true;
    }
    return false;
}

bool least_in_orbit(const std::vector<State>& block, int p, int q) {
    std::vector<State> t(block.size());
    for (int dx = 0; dx < p; ++dx)
        for (int dy = 0; dy < q; ++dy) {
            if (dx == 0 && dy == 0) continue;
            for (int x = 0; x < p; ++x)
                for (int y = 0; y < q; ++y)
                    t[static_cast<std::size_t>(x) * q + y] =
                        block[static_cast<std::size_t>((x + dx) % p) * q + (y + dy) % q];
            if (t < block) return false;
        }
    return true;
}

bool tiling_order(const TorusTiling& a, const TorusTiling& b) {
    auto key = [](const TorusTiling& t) { return std::make_tuple(std::max(t.p, t.q), t.p, t.q); };
    if (key(a) != key(b)) return key(a) < key(b);
    return a.block < b.block;
}

using Cycle = std::vector<std::uint32_t>;

// Simple cycles, each listed once starting from its least vertex.
std::vector<Cycle> simple_cycles(const TransferGraph& g, std::size_t cap) {
    std::vector<Cycle> out;
    const auto n = static_cast<std::uint32_t>(g.vertex_count());
    std::vector<char> on_path(n, 0);
    Cycle path;
    bool full = false;

    auto dfs = [&](auto&& self, std::uint32_t start, std::uint32_t v) -> void {
        for (std::uint32_t w : g.successors[v]) {
            if (full) return;
            if (w == start) {
                out.push_back(path);
                if (out.size() >= cap) full = true;
            } else if (w > start && !on_path[w]) {
                on_path[w] = 1;
                path.push_back(w);
                self(self, start, w);
                path.pop_back();
                on_path[w] = 0;
            }
        }
    };
    for (std::uint32_t s = 0; s < n && !full; ++s) {
        path = {s};
        on_path[s] = 1;
        dfs(dfs, s, s);
        on_path[s] = 0;
    }
    std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<char> reachable_from(const TransferGraph& g, std::uint32_t s) {
    std::vector<char> seen(g.vertex_count(), 0);
    std::deque<std::uint32_t> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        for (auto v : g.successors[u])
            if (!seen[v]) {
                seen[v] = 1;
                queue.push_back(v);
            }
    }
    return seen;
}

// Lexicographically least among the shortest paths from a to b.
std::vector<std::uint32_t> least_shortest_path(const TransferGraph& g, std::uint32_t a, std::uint32_t b) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<std::uint32_t>> pred(n);
    for (std::uint32_t u = 0; u < n; ++u)
        for (auto v : g.successors[u]) pred[v].push_back(u);
    std::vector<int> dist(n, -1);
    std::deque<std::uint32_t> queue{b};
    dist[b] = 0;
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto u : pred[v])
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
    }
    if (dist[a] < 0) return {};
    std::vector<std::uint32_t> path{a};
    while (path.back() != b) {
        const auto u = path.back();
        for (auto v : g.successors[u])
            if (dist[v] == dist[u] - 1) {
                path.push_back(v);
                break;
            }
    }
    return path;
}

using Columns = std::vector<std::vector<State>>;

Columns cycle_columns(const TransferGraph& g, const Cycle& c) {
    Columns cols;
    for (auto v : c) cols.push_back(g.last_column(v));
    return cols;
}

// Same periodic strip up to horizontal and vertical translation.
bool rotation_equivalent(const Columns& a, const Columns& b, int q) {
    if (a.size() != b.size()) return false;
    const std::size_t len = a.size();
    for (int r = 0; r < q; ++r)
        for (std::size_t s = 0; s < len; ++s) {
            bool same = true;
            for (std::size_t j = 0; j < len && same; ++j)
                for (int y = 0; y < q && same; ++y)
                    same = b[(j + s) % len][y] == a[j][(y + r) % q];
            if (same) return true;
        }
    return false;
}

Block columns_block(const Columns& cols, int q, std::size_t rotate) {
    const auto u = static_cast<int>(cols.size());
    Block b{u, q, std::vector<State>(static_cast<std::size_t>(u) * q)};
    for (int x = 0; x < u; ++x) {
        const auto& col = cols[(static_cast<std::size_t>(x) + rotate) % cols.size()];
        std::copy(col.begin(), col.end(), b.data.begin() + static_cast<std::ptrdiff_t>(x) * q);
    }
    return b;
}

std::optional<WeakPeriodicWitness> search_orientation(const TileSet& ts, int q,
                                                      const WitnessOptions& options) {
    const TransferGraph g = build_transfer_graph(ts, q, true);
    if (g.vertex_count() == 0) return std::nullopt;
    const auto cycles = simple_cycles(g, options.max_cycles);
    std::vector<Columns> cols;
    for (const auto& c : cycles) cols.push_back(cycle_columns(g, c));

    std::map<std::uint32_t, std::vector<char>> reach;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        const auto start = cycles[i][0];
        auto it = reach.find(start);
        if (it == reach.end()) it = reach.emplace(start, reachable_from(g, start)).first;
        for (std::size_t j = 0; j < cycles.size(); ++j) {
            if (i == j || !it->second[cycles[j][0]]) continue;
            if (rotation_equivalent(cols[i], cols[j], q)) continue;

            const auto path = least_shortest_path(g, start, cycles[j][0]);
            const std::size_t m = path.size() - 1;
            std::vector<int> xcuts;
            for (std::size_t c = 1; c <= std::max<std::size_t>(m, 1); ++c) xcuts.push_back(static_cast<int>(c));

            std::vector<Block> regions;
            regions.push_back(columns_block(cols[i], q, 0));
            for (std::size_t c = 1; c < m; ++c) regions.push_back(columns_block({g.last_column(path[c])}, q, 0));
            // Right block is anchored so that column m starts the second cycle.
            const std::size_t len = cols[j].size();
            regions.push_back(columns_block(cols[j], q, (len - m % len) % len));

            WeakPeriodicWitness w{
                GridPresentation(ts.alphabet(), std::move(xcuts), {}, std::move(regions)),
                q, false, cols[i], cols[j], m > 0 ? m - 1 : 0};
            return w;
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<TorusTiling> enumerate_torus(const TileSet& ts, int maxp, int maxq) {
    if (maxp < 1 || maxq < 1) throw UsageError("torus bounds must be at least 1");
    std::vector<TorusTiling> out;
    for (int p = 1; p <= maxp; ++p) {
        for (int q = 1; q <= maxq; ++q) {
            detail::RectSearch search(ts, p, q, true, true);
            search.run([&](const std::vector<State>& block) {
                if (!has_smaller_period(block, p, q, true) && !has_smaller_period(block, p, q, false) &&
                    least_in_orbit(block, p, q))
                    out.push_back({p, q, block});
                return true;
            });
        }
    }
    std::sort(out.begin(), out.end(), tiling_order);
    return out;
}

bool refute(const TileSet& ts, int n) { return !has_admissible_square(ts, n); }

ClassifyOutcome classify(const TileSet& ts, int budget) {
    if (budget < 1) throw UsageError("budget must be at least 1");
    for (int n = 1; n <= budget; ++n)
        if (refute(ts, n)) return Empty{n};
    for (int s = 1; s <= budget; ++s)
        for (int p = 1; p <= s; ++p)
            for (int q = 1; q <= s; ++q) {
                if (std::max(p, q) != s) continue;
                detail::RectSearch search(ts, p, q, true, true);
                std::optional<TorusTiling> first;
                search.run([&](const std::vector<State>& block) {
                    first = TorusTiling{p, q, block};
                    return false;
                });
                if (first) return PeriodicFound{*first};
            }
    return Unknown{budget};
}

std::optional<WeakPeriodicWitness> find_weak_periodic_witness(const TileSet& ts, int maxq,
                                                              WitnessOptions options) {
    if (maxq < 1) throw UsageError("maximal period must be at least 1");
    const TileSet flipped = ts.transposed();
    for (int q = 1; q <= maxq; ++q) {
        for (bool transposed : {false, true}) {
            auto w = search_orientation(transposed ? flipped : ts, q, options);
            if (!w) continue;
            if (transposed) {
                w->presentation = w->presentation.transposed();
                w->transposed = true;
            }
            const PeriodLattice lattice = period_lattice(w->presentation);
            if (!is_valid(w->presentation, ts) || lattice.rank != 1 ||
                rotation_equivalent(w->left_cycle, w->right_cycle, q))
                throw std::logic_error("weak periodic witness failed its own checks");
            return w;
        }
    }
    return std::nullopt;
}

std::optional<GridPresentation> weak_periodic_witness(const TileSet& ts, int maxq) {
    auto w = find_weak_periodic_witness(ts, maxq);
    if (!w) return std::nullopt;
    return std::move(w->presentation);
}

}  // namespace tilings
