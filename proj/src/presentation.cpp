#include "tilings/presentation.hpp"

#include <algorithm>
#include <numeric>

namespace tilings {

namespace {

constexpr long long kMaxPeriod = 1 << 16;

int checked_lcm(int a, int b) {
    long long l = std::lcm<long long>(a, b);
    if (l > kMaxPeriod) throw UsageError("block periods have too large a common multiple");
    return static_cast<int>(l);
}

void check_cuts(const std::vector<int>& cuts) {
    for (std::size_t i = 1; i < cuts.size(); ++i)
        if (cuts[i] <= cuts[i - 1]) throw UsageError("cuts must be strictly increasing");
}

std::size_t band_of(const std::vector<int>& cuts, int v) {
    return static_cast<std::size_t>(std::upper_bound(cuts.begin(), cuts.end(), v) - cuts.begin());
}

// Two blocks describe the same doubly periodic function.
bool same_fill(const Block& a, const Block& b) {
    if (a == b) return true;
    const int lu = checked_lcm(a.u, b.u), lv = checked_lcm(a.v, b.v);
    for (int x = 0; x < lu; ++x)
        for (int y = 0; y < lv; ++y)
            if (a.at(x, y) != b.at(x, y)) return false;
    return true;
}

const Block& smaller(const Block& a, const Block& b) {
    return b.u * b.v < a.u * a.v ? b : a;
}

enum class AxisClass : std::uint8_t { Periodic, Low, Middle, High };

// Corner positions along one axis whose windows represent every window of
// the configuration, with the recurrence class of each.
struct AxisScan {
    int first = 0;
    int last = 0;  // inclusive
    std::vector<AxisClass> cls;

    AxisClass at(int t) const { return cls[static_cast<std::size_t>(t - first)]; }
};

AxisScan axis_scan(const std::vector<int>& cuts, int period, int extent, int extra) {
    AxisScan s;
    if (cuts.empty()) {
        s.first = -extra;
        s.last = period - 1 + extra;
        s.cls.assign(static_cast<std::size_t>(s.last - s.first + 1), AxisClass::Periodic);
        return s;
    }
    s.first = cuts.front() - extent - period - extra;
    s.last = cuts.back() + period + extra;
    for (int t = s.first; t <= s.last; ++t) {
        if (t <= cuts.front() - extent)
            s.cls.push_back(AxisClass::Low);
        else if (t >= cuts.back())
            s.cls.push_back(AxisClass::High);
        else
            s.cls.push_back(AxisClass::Middle);
    }
    return s;
}

// The configuration materialized on a finite rectangle.
class Dense {
  public:
    Dense(const GridPresentation& g, int x0, int y0, int w, int h)
        : x0_(x0), y0_(y0), h_(h), data_(static_cast<std::size_t>(w) * h) {
        for (int x = 0; x < w; ++x)
            for (int y = 0; y < h; ++y)
                data_[static_cast<std::size_t>(x) * h + y] = g.cell_at({x0 + x, y0 + y});
    }

    State at(int x, int y) const {
        return data_[static_cast<std::size_t>(x - x0_) * h_ + (y - y0_)];
    }

    void key(int x, int y, int w, int h, WindowKey& out) const {
        out.resize(static_cast<std::size_t>(w) * h);
        std::size_t k = 0;
        for (int i = 0; i < w; ++i) {
            const State* col = &data_[static_cast<std::size_t>(x + i - x0_) * h_ + (y - y0_)];
            for (int j = 0; j < h; ++j) out[k++] = static_cast<char>(col[j]);
        }
    }

  private:
    int x0_;
    int y0_;
    int h_;
    std::vector<State> data_;
};

struct Scan {
    AxisScan xs;
    AxisScan ys;
    Dense dense;

    Scan(const GridPresentation& g, int w, int h, int extra)
        : xs(axis_scan(g.xcuts(), g.period_x(), w, extra)),
          ys(axis_scan(g.ycuts(), g.period_y(), h, extra)),
          dense(g, xs.first, ys.first, xs.last - xs.first + w, ys.last - ys.first + h) {}
};

}  // namespace

// ---------------------------------------------------------------------------

GridPresentation::GridPresentation(AlphabetRef alphabet, std::vector<int> xcuts,
                                   std::vector<int> ycuts, std::vector<Block> regions)
    : alphabet_(std::move(alphabet)),
      xcuts_(std::move(xcuts)),
      ycuts_(std::move(ycuts)),
      regions_(std::move(regions)) {
    if (!alphabet_) throw UsageError("presentation needs an alphabet");
    check_cuts(xcuts_);
    check_cuts(ycuts_);
    if (regions_.size() != (xcuts_.size() + 1) * (ycuts_.size() + 1))
        throw UsageError("presentation needs exactly one block per region");
    for (const Block& b : regions_) {
        if (b.u < 1 || b.v < 1 || b.data.size() != static_cast<std::size_t>(b.u) * b.v)
            throw UsageError("block dimensions do not match its data");
        for (State s : b.data)
            if (s >= alphabet_->size()) throw UsageError("block state out of range");
        period_x_ = checked_lcm(period_x_, b.u);
        period_y_ = checked_lcm(period_y_, b.v);
    }
}

GridPresentation GridPresentation::uniform(AlphabetRef alphabet, Block block) {
    return GridPresentation(std::move(alphabet), {}, {}, {std::move(block)});
}

State GridPresentation::cell_at(Vec2 pos) const {
    return region(band_of(xcuts_, pos.x), band_of(ycuts_, pos.y)).at(pos.x, pos.y);
}

int GridPresentation::structural_bound() const {
    return std::max(span_x() + period_x_, span_y() + period_y_) + 1;
}

GridPresentation GridPresentation::transposed() const {
    const std::size_t nx = xcuts_.size() + 1, ny = ycuts_.size() + 1;
    std::vector<Block> regions(nx * ny);
    for (std::size_t ix = 0; ix < nx; ++ix) {
        for (std::size_t iy = 0; iy < ny; ++iy) {
            const Block& b = region(ix, iy);
            Block t{b.v, b.u, std::vector<State>(b.data.size())};
            for (int x = 0; x < b.u; ++x)
                for (int y = 0; y < b.v; ++y)
                    t.data[static_cast<std::size_t>(y) * t.v + x] = b.data[static_cast<std::size_t>(x) * b.v + y];
            regions[iy * nx + ix] = std::move(t);
        }
    }
    return GridPresentation(alphabet_, ycuts_, xcuts_, std::move(regions));
}

GridPresentation GridPresentation::simplified() const {
    std::vector<int> xc = xcuts_, yc = ycuts_;
    std::vector<Block> reg = regions_;
    auto at = [&](std::size_t ix, std::size_t iy) -> Block& { return reg[ix * (yc.size() + 1) + iy]; };

    bool changed = true;
    while (changed) {
        changed = false;
        // Vertical cuts: cut i separates x bands i and i + 1.
        for (std::size_t i = 0; i < xc.size(); ++i) {
            bool redundant = true;
            for (std::size_t iy = 0; iy <= yc.size() && redundant; ++iy)
                redundant = same_fill(at(i, iy), at(i + 1, iy));
            if (!redundant) continue;
            std::vector<Block> next;
            for (std::size_t ix = 0; ix <= xc.size(); ++ix) {
                if (ix == i + 1) continue;
                for (std::size_t iy = 0; iy <= yc.size(); ++iy)
                    next.push_back(ix == i ? smaller(at(i, iy), at(i + 1, iy)) : at(ix, iy));
            }
            xc.erase(xc.begin() + static_cast<std::ptrdiff_t>(i));
            reg = std::move(next);
            changed = true;
            break;
        }
        if (changed) continue;
        for (std::size_t j = 0; j < yc.size(); ++j) {
            bool redundant = true;
            for (std::size_t ix = 0; ix <= xc.size() && redundant; ++ix)
                redundant = same_fill(at(ix, j), at(ix, j + 1));
            if (!redundant) continue;
            std::vector<Block> next;
            for (std::size_t ix = 0; ix <= xc.size(); ++ix)
                for (std::size_t iy = 0; iy <= yc.size(); ++iy) {
                    if (iy == j + 1) continue;
                    next.push_back(iy == j ? smaller(at(ix, j), at(ix, j + 1)) : at(ix, iy));
                }
            yc.erase(yc.begin() + static_cast<std::ptrdiff_t>(j));
            reg = std::move(next);
            changed = true;
            break;
        }
    }
    return GridPresentation(alphabet_, std::move(xc), std::move(yc), std::move(reg));
}

// ---------------------------------------------------------------------------

bool PeriodLattice::contains(Vec2 v) const {
    if (rank == 0) return v.x == 0 && v.y == 0;
    if (rank == 1) {
        const Vec2 g = generators[0];
        if (static_cast<long long>(g.x) * v.y != static_cast<long long>(g.y) * v.x) return false;
        return g.x != 0 ? v.x % g.x == 0 : v.y % g.y == 0;
    }
    const Vec2 a = generators[0];
    const int d = generators[1].y;
    if (v.x % a.x != 0) return false;
    const long long k = v.x / a.x;
    return (v.y - k * a.y) % d == 0;
}

PeriodLattice lattice_from(const std::vector<Vec2>& vectors) {
    bool have_a = false;
    long long ax = 0, ay = 0, d = 0;
    for (const Vec2& in : vectors) {
        long long vx = in.x, vy = in.y;
        while (vx != 0) {
            if (!have_a) {
                ax = vx;
                ay = vy;
                have_a = true;
                vx = vy = 0;
                break;
            }
            const long long q = ax / vx;
            const long long rx = ax - q * vx, ry = ay - q * vy;
            ax = vx;
            ay = vy;
            vx = rx;
            vy = ry;
        }
        if (have_a && ax < 0) {
            ax = -ax;
            ay = -ay;
        }
        d = std::gcd(d, vy < 0 ? -vy : vy);
        if (have_a && d > 0) ay = ((ay % d) + d) % d;
    }
    PeriodLattice l;
    if (have_a) l.generators.push_back({static_cast<int>(ax), static_cast<int>(ay)});
    if (d > 0) l.generators.push_back({0, static_cast<int>(d)});
    l.rank = static_cast<int>(l.generators.size());
    return l;
}

// ---------------------------------------------------------------------------

Pattern window_at(const GridPresentation& g, Vec2 corner, int w, int h) {
    if (w < 1 || h < 1) throw UsageError("window size must be at least 1");
    std::vector<State> data(static_cast<std::size_t>(w) * h);
    for (int x = 0; x < w; ++x)
        for (int y = 0; y < h; ++y)
            data[static_cast<std::size_t>(x) * h + y] = g.cell_at(corner + Vec2{x, y});
    return Pattern::from_grid(g.alphabet(), w, h, data);
}

Pattern window_at(const GridPresentation& g, Vec2 corner, int n) {
    return window_at(g, corner, n, n);
}

WindowSet window_keys(const GridPresentation& g, int w, int h, int extra_margin) {
    if (w < 1 || h < 1) throw UsageError("window size must be at least 1");
    Scan scan(g, w, h, extra_margin);
    WindowSet out;
    WindowKey key;
    for (int tx = scan.xs.first; tx <= scan.xs.last; ++tx)
        for (int ty = scan.ys.first; ty <= scan.ys.last; ++ty) {
            scan.dense.key(tx, ty, w, h, key);
            out.insert(key);
        }
    return out;
}

Pattern pattern_from_key(const AlphabetRef& alphabet, int w, int h, const WindowKey& key) {
    std::vector<State> data(key.begin(), key.end());
    return Pattern::from_grid(alphabet, w, h, data);
}

std::vector<Pattern> pattern_set(const GridPresentation& g, int n) {
    WindowSet keys = window_keys(g, n, n);
    std::vector<WindowKey> sorted(keys.begin(), keys.end());
    std::sort(sorted.begin(), sorted.end(), [](const WindowKey& a, const WindowKey& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [](char x, char y) {
                                                return static_cast<State>(x) < static_cast<State>(y);
                                            });
    });
    std::vector<Pattern> out;
    out.reserve(sorted.size());
    for (const auto& k : sorted) out.push_back(pattern_from_key(g.alphabet(), n, n, k));
    return out;
}

std::vector<Occurrence> scan_occurrences(const GridPresentation& g, const Pattern& p) {
    if (p.empty()) throw UsageError("occurrence scan needs a nonempty pattern");
    if (!same_alphabet(g.alphabet(), p.alphabet())) throw UsageError("alphabet mismatch");
    const Pattern n = normalize(p);
    const int w = n.width(), h = n.height();
    Scan scan(g, w, h, 0);
    std::vector<Occurrence> out;
    for (int tx = scan.xs.first; tx <= scan.xs.last; ++tx) {
        for (int ty = scan.ys.first; ty <= scan.ys.last; ++ty) {
            bool match = true;
            for (const auto& [pos, s] : n.cells()) {
                if (scan.dense.at(tx + pos.x, ty + pos.y) != s) {
                    match = false;
                    break;
                }
            }
            if (!match) continue;
            out.push_back({{tx, ty},
                           scan.xs.at(tx) != AxisClass::Middle,
                           scan.ys.at(ty) != AxisClass::Middle});
        }
    }
    return out;
}

Occurrences occurrences(const GridPresentation& g, const Pattern& p) {
    const auto occ = scan_occurrences(g, p);
    if (occ.empty()) return Occurrences::zero();
    for (const auto& o : occ)
        if (o.recurs_x || o.recurs_y) return Occurrences::infinite();
    return Occurrences::finite(occ.size());
}

bool is_valid(const GridPresentation& g, const TileSet& ts) {
    if (!same_alphabet(g.alphabet(), ts.alphabet())) throw UsageError("alphabet mismatch");
    for (std::size_t s = 0; s < ts.shape_count(); ++s) {
        int sw = 0, sh = 0;
        for (const Vec2& d : ts.rules()[s].domain) {
            sw = std::max(sw, d.x + 1);
            sh = std::max(sh, d.y + 1);
        }
        Scan scan(g, sw, sh, 0);
        auto cell = [&](Vec2 v) { return scan.dense.at(v.x, v.y); };
        for (int tx = scan.xs.first; tx <= scan.xs.last; ++tx)
            for (int ty = scan.ys.first; ty <= scan.ys.last; ++ty)
                if (!ts.allows_at(s, {tx, ty}, cell)) return false;
    }
    return true;
}

bool equal(const GridPresentation& a, const GridPresentation& b) {
    if (!same_alphabet(a.alphabet(), b.alphabet())) throw UsageError("alphabet mismatch");
    auto range = [](const std::vector<int>& ca, const std::vector<int>& cb, int period) {
        std::vector<int> cuts = ca;
        cuts.insert(cuts.end(), cb.begin(), cb.end());
        if (cuts.empty()) return std::pair<int, int>{0, period};
        auto [lo, hi] = std::minmax_element(cuts.begin(), cuts.end());
        return std::pair<int, int>{*lo - period, *hi + period};
    };
    const auto [x0, x1] = range(a.xcuts(), b.xcuts(), checked_lcm(a.period_x(), b.period_x()));
    const auto [y0, y1] = range(a.ycuts(), b.ycuts(), checked_lcm(a.period_y(), b.period_y()));
    for (int x = x0; x < x1; ++x)
        for (int y = y0; y < y1; ++y)
            if (a.cell_at({x, y}) != b.cell_at({x, y})) return false;
    return true;
}

GridPresentation shift(const GridPresentation& g, Vec2 v) {
    std::vector<int> xc = g.xcuts(), yc = g.ycuts();
    for (int& c : xc) c -= v.x;
    for (int& c : yc) c -= v.y;
    std::vector<Block> regions;
    regions.reserve(g.regions().size());
    for (const Block& b : g.regions()) {
        Block s{b.u, b.v, std::vector<State>(b.data.size())};
        for (int x = 0; x < b.u; ++x)
            for (int y = 0; y < b.v; ++y)
                s.data[static_cast<std::size_t>(x) * b.v + y] =
                    b.at(static_cast<long long>(x) + v.x, static_cast<long long>(y) + v.y);
        regions.push_back(std::move(s));
    }
    return GridPresentation(g.alphabet(), std::move(xc), std::move(yc), std::move(regions));
}

PeriodLattice period_lattice(const GridPresentation& g) {
    const GridPresentation s = g.simplified();
    const int bx = s.span_x() + s.period_x();
    const int by = s.span_y() + s.period_y();
    std::vector<Vec2> periods;
    // v and -v are periods together, so half of the box suffices.
    for (int x = 0; x <= bx; ++x) {
        for (int y = -by; y <= by; ++y) {
            if (x == 0 && y <= 0) continue;
            if (equal(s, shift(s, {x, y}))) periods.push_back({x, y});
        }
    }
    return lattice_from(periods);
}

TilingType type_of(const GridPresentation& g) {
    const GridPresentation s = g.simplified();
    // Without cuts along some axis every window recurs along that axis.
    if (s.xcuts().empty() || s.ycuts().empty()) return TypeA{};
    const int base_w = s.span_x() + 2, base_h = s.span_y() + 2;
    const int limit = std::max(s.span_x(), s.span_y()) + 2 * std::max(s.period_x(), s.period_y()) + 2;
    const Vec2 core{s.xcuts().front() - 1, s.ycuts().front() - 1};
    for (int k = 0; k <= limit; ++k) {
        Pattern w = window_at(s, core - Vec2{k, k}, base_w + 2 * k, base_h + 2 * k);
        if (occurrences(s, w) == Occurrences::finite(1)) return TypeB{std::move(w)};
    }
    return TypeA{};
}

}  // namespace tilings
