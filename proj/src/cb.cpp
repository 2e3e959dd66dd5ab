#include "tilings/cb.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "tilings/presentation.hpp"

namespace tilings {

namespace {

bool key_less(const WindowKey& a, const WindowKey& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
        return static_cast<State>(x) < static_cast<State>(y);
    });
}

// Isolation queries against a shrinking set of active members, sharing
// window sets, lattices and equivalence answers between queries.
class Isolator {
  public:
    explicit Isolator(const TilingFamily& f) : f_(f), active_(f.size(), 1), lattices_(f.size()) {}

    void deactivate(std::size_t i) { active_[i] = 0; }

    std::optional<Pattern> find(std::size_t x) {
        const GridPresentation& g = f_.member(x).tiling;
        const int m = std::max(f_.window(), g.structural_bound());
        std::vector<std::tuple<int, int, int>> sizes;
        for (int w = 1; w <= m; ++w)
            for (int h = 1; h <= m; ++h) sizes.emplace_back(w * h, w, h);
        std::sort(sizes.begin(), sizes.end());

        for (const auto& [area, w, h] : sizes) {
            const WindowSet& own = windows(x, w, h);
            std::vector<WindowKey> keys(own.begin(), own.end());
            std::sort(keys.begin(), keys.end(), key_less);
            for (const auto& key : keys) {
                if (!unique_to_class(x, w, h, key)) continue;
                Pattern p = pattern_from_key(f_.alphabet(), w, h, key);
                if (single_orbit(x, p)) return p;
            }
        }
        return std::nullopt;
    }

  private:
    const WindowSet& windows(std::size_t i, int w, int h) {
        auto k = std::make_tuple(i, w, h);
        auto it = windows_.find(k);
        if (it == windows_.end()) it = windows_.emplace(k, window_keys(f_.member(i).tiling, w, h)).first;
        return it->second;
    }

    bool equivalent(std::size_t i, std::size_t j) {
        auto k = std::minmax(i, j);
        auto it = equivalent_.find(k);
        if (it != equivalent_.end()) return it->second;
        const auto& a = f_.member(i).tiling;
        const auto& b = f_.member(j).tiling;
        const bool eq = preceq(a, b, f_.window()) && preceq(b, a, f_.window());
        equivalent_.emplace(k, eq);
        return eq;
    }

    bool unique_to_class(std::size_t x, int w, int h, const WindowKey& key) {
        for (std::size_t y = 0; y < f_.size(); ++y) {
            if (y == x || !active_[y]) continue;
            if (windows(y, w, h).count(key) && !equivalent(x, y)) return false;
        }
        return true;
    }

    const PeriodLattice& lattice(std::size_t i) {
        if (!lattices_[i]) lattices_[i] = period_lattice(f_.member(i).tiling);
        return *lattices_[i];
    }

    // Every occurrence of p in x is a period translate of every other.
    bool single_orbit(std::size_t x, const Pattern& p) {
        const GridPresentation& g = f_.member(x).tiling;
        const auto occ = scan_occurrences(g, p);
        const PeriodLattice& lat = lattice(x);
        for (const auto& o : occ) {
            if (!lat.contains(o.offset - occ.front().offset)) return false;
            if (o.recurs_x && !lat.contains({g.period_x(), 0})) return false;
            if (o.recurs_y && !lat.contains({0, g.period_y()})) return false;
        }
        return !occ.empty();
    }

    const TilingFamily& f_;
    std::vector<char> active_;
    std::vector<std::optional<PeriodLattice>> lattices_;
    std::map<std::tuple<std::size_t, int, int>, WindowSet> windows_;
    std::map<std::pair<std::size_t, std::size_t>, bool> equivalent_;
};

}  // namespace

std::optional<Pattern> isolating_pattern(const TilingFamily& f, std::size_t x) {
    if (x >= f.size()) throw UsageError("member index out of range");
    return Isolator(f).find(x);
}

TilingFamily derivative(const TilingFamily& f) {
    Isolator iso(f);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!iso.find(i)) keep.push_back(i);
    return f.subset(keep);
}

RankReport ranks(const TilingFamily& f) {
    RankReport r;
    r.rank.assign(f.size(), std::nullopt);
    Isolator iso(f);
    std::vector<std::size_t> alive(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) alive[i] = i;

    while (!alive.empty()) {
        std::vector<std::size_t> removed, kept;
        for (auto i : alive) (iso.find(i) ? removed : kept).push_back(i);
        if (removed.empty()) break;
        ++r.family_rank;
        for (auto i : removed) {
            r.rank[i] = r.family_rank;
            iso.deactivate(i);
        }
        r.layers.push_back(std::move(removed));
        alive = std::move(kept);
    }
    r.residue = alive;
    return r;
}

}  // namespace tilings
