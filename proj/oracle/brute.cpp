#include "brute.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace oracle {

namespace {

std::vector<std::vector<bool>> table(int q, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<std::vector<bool>> t(q, std::vector<bool>(q, false));
    for (auto [a, b] : pairs) t[a][b] = true;
    return t;
}

// All rows of length n whose horizontal neighbours are allowed.
std::vector<std::vector<int>> valid_rows(const Dominoes& d, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> row(n);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            out.push_back(row);
            return;
        }
        for (int s = 0; s < d.q; ++s) {
            if (i > 0 && !d.h[row[i - 1]][s]) continue;
            row[i] = s;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

bool stackable(const Dominoes& d, const std::vector<int>& top, const std::vector<int>& bottom) {
    for (std::size_t i = 0; i < top.size(); ++i)
        if (!d.v[top[i]][bottom[i]]) return false;
    return true;
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::vector<int> decode(std::uint64_t code, int q, int size) {
    std::vector<int> cells(size);
    for (int i = 0; i < size; ++i) {
        cells[i] = static_cast<int>(code % q);
        code /= q;
    }
    return cells;
}

bool torus_valid(const Dominoes& d, const std::vector<int>& c, int p, int q) {
    for (int y = 0; y < q; ++y)
        for (int x = 0; x < p; ++x) {
            const int here = c[y * p + x];
            if (!d.h[here][c[y * p + (x + 1) % p]]) return false;
            if (!d.v[c[((y + 1) % q) * p + x]][here]) return false;
        }
    return true;
}

std::vector<int> translate(const std::vector<int>& c, int p, int q, int dx, int dy) {
    std::vector<int> t(c.size());
    for (int y = 0; y < q; ++y)
        for (int x = 0; x < p; ++x) t[y * p + x] = c[((y + dy) % q) * p + (x + dx) % p];
    return t;
}

}  // namespace

Dominoes stripes() {
    enum { R, G, W, B };
    return {4,
            table(4, {{R, R}, {R, W}, {R, G}, {R, B}, {W, W}, {G, G}, {B, B}}),
            table(4, {{R, R}, {G, G}, {G, W}, {W, W}, {W, B}, {B, B}})};
}

Dominoes checkerboard() { return {2, table(2, {{0, 1}, {1, 0}}), table(2, {{0, 1}, {1, 0}})}; }

Dominoes random_dominoes(int q, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    Dominoes d{q, table(q, {}), table(q, {})};
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) d.h[a][b] = coin(rng);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) d.v[a][b] = coin(rng);
    return d;
}

std::uint64_t count_admissible(const Dominoes& d, int n) {
    const auto rows = valid_rows(d, n);
    std::vector<std::uint64_t> ways(rows.size(), 1);
    for (int level = 1; level < n; ++level) {
        std::vector<std::uint64_t> next(rows.size(), 0);
        for (std::size_t t = 0; t < rows.size(); ++t)
            for (std::size_t b = 0; b < rows.size(); ++b)
                if (stackable(d, rows[t], rows[b])) next[t] += ways[b];
        ways = std::move(next);
    }
    std::uint64_t total = 0;
    for (auto w : ways) total += w;
    return total;
}

std::uint64_t count_extensible(const Dominoes& d, int n, int m) {
    const int big = n + 2 * m;
    const auto rows = valid_rows(d, big);
    std::set<std::vector<int>> centers;
    std::vector<std::size_t> stack;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(stack.size()) == big) {
            std::vector<int> c;
            for (int y = m; y < m + n; ++y)
                for (int x = m; x < m + n; ++x) c.push_back(rows[stack[y]][x]);
            centers.insert(std::move(c));
            return;
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!stack.empty() && !stackable(d, rows[r], rows[stack.back()])) continue;
            stack.push_back(r);
            self(self);
            stack.pop_back();
        }
    };
    rec(rec);
    return centers.size();
}

std::uint64_t count_torus_blocks(const Dominoes& d, int p, int q) {
    const std::uint64_t total = ipow(d.q, p * q);
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < total; ++code)
        if (torus_valid(d, decode(code, d.q, p * q), p, q)) ++count;
    return count;
}

namespace {

// Valid tori built row by row from cyclically valid rows.
std::vector<std::vector<int>> torus_blocks_by_rows(const Dominoes& d, int p, int q) {
    std::vector<std::vector<int>> rows;
    for (auto& r : valid_rows(d, p))
        if (d.h[r[p - 1]][r[0]]) rows.push_back(std::move(r));
    std::vector<std::vector<int>> out;
    std::vector<std::size_t> stack;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(stack.size()) == q) {
            if (!stackable(d, rows[stack.front()], rows[stack.back()])) return;
            std::vector<int> c;
            for (auto r : stack) c.insert(c.end(), rows[r].begin(), rows[r].end());
            out.push_back(std::move(c));
            return;
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!stack.empty() && !stackable(d, rows[r], rows[stack.back()])) continue;
            stack.push_back(r);
            self(self);
            stack.pop_back();
        }
    };
    rec(rec);
    return out;
}

}  // namespace

std::vector<Torus> torus_classes(const Dominoes& d, int maxp, int maxq) {
    std::vector<Torus> out;
    for (int p = 1; p <= maxp; ++p)
        for (int q = 1; q <= maxq; ++q) {
            std::set<std::vector<int>> seen;
            for (const auto& c : torus_blocks_by_rows(d, p, q)) {
                bool smaller = false;
                for (int dx = 1; dx < p && !smaller; ++dx) smaller = translate(c, p, q, dx, 0) == c;
                for (int dy = 1; dy < q && !smaller; ++dy) smaller = translate(c, p, q, 0, dy) == c;
                if (smaller) continue;
                std::vector<int> canon = c;
                for (int dx = 0; dx < p; ++dx)
                    for (int dy = 0; dy < q; ++dy) canon = std::min(canon, translate(c, p, q, dx, dy));
                if (seen.insert(canon).second) out.push_back({p, q, canon});
            }
        }
    return out;
}

bool valid_in_box(const Dominoes& d, const std::function<int(int, int)>& cell, int r) {
    for (int x = -r; x <= r; ++x)
        for (int y = -r; y <= r; ++y) {
            if (x < r && !d.h[cell(x, y)][cell(x + 1, y)]) return false;
            if (y < r && !d.v[cell(x, y + 1)][cell(x, y)]) return false;
        }
    return true;
}

std::vector<std::pair<int, int>> periods_in_box(const std::function<int(int, int)>& cell, int k, int r) {
    std::vector<std::pair<int, int>> out;
    for (int vx = -k; vx <= k; ++vx)
        for (int vy = -k; vy <= k; ++vy) {
            if (vx == 0 && vy == 0) continue;
            bool same = true;
            for (int x = -r; x <= r && same; ++x)
                for (int y = -r; y <= r && same; ++y) same = cell(x + vx, y + vy) == cell(x, y);
            if (same) out.push_back({vx, vy});
        }
    return out;
}

// ---------------------------------------------------------------------------

std::vector<Member> stripes_family(int maxi) {
    enum { R, G, W, B };
    std::vector<Member> f;
    auto constant = [](int s) { return [s](int, int) { return s; }; };
    f.push_back({"all-red", constant(R), 2});
    f.push_back({"all-green", constant(G), 2});
    f.push_back({"all-white", constant(W), 2});
    f.push_back({"all-black", constant(B), 2});
    for (int s : {G, W, B}) {
        const std::string name = std::string("red|") + "RGWB"[s];
        f.push_back({name, [s](int x, int) { return x < 0 ? R : s; }, 2});
    }
    f.push_back({"G|W", [](int, int y) { return y >= 0 ? G : W; }, 2});
    f.push_back({"W|B", [](int, int y) { return y >= 0 ? W : B; }, 2});
    f.push_back({"red|(G|W)", [](int x, int y) { return x < 0 ? R : (y >= 0 ? G : W); }, 2});
    f.push_back({"red|(W|B)", [](int x, int y) { return x < 0 ? R : (y >= 0 ? W : B); }, 2});
    auto band = [](int i, int y) { return y < 0 ? B : (y < i ? W : G); };
    for (int i = 1; i <= maxi; ++i)
        f.push_back({"B" + std::to_string(i), [i, band](int, int y) { return band(i, y); }, i + 2});
    for (int i = 1; i <= maxi; ++i)
        f.push_back({"A" + std::to_string(i), [i, band](int x, int y) { return x < 0 ? R : band(i, y); }, i + 2});
    return f;
}

namespace {

class Windows {
  public:
    Windows(const std::vector<Member>& members, int radius) : members_(members), radius_(radius) {}

    const std::unordered_set<std::string>& get(std::size_t i, int w, int h) {
        const auto key = (static_cast<std::uint64_t>(i) << 32) | (static_cast<std::uint64_t>(w) << 16) |
                         static_cast<std::uint64_t>(h);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        std::unordered_set<std::string> s;
        for (int x = -radius_; x <= radius_; ++x)
            for (int y = -radius_; y <= radius_; ++y) s.insert(at(i, x, y, w, h));
        return cache_.emplace(key, std::move(s)).first->second;
    }

    std::string at(std::size_t i, int x, int y, int w, int h) const {
        std::string k;
        k.reserve(static_cast<std::size_t>(w) * h);
        for (int dy = 0; dy < h; ++dy)
            for (int dx = 0; dx < w; ++dx) k.push_back(static_cast<char>('0' + members_[i].cell(x + dx, y + dy)));
        return k;
    }

    int radius() const { return radius_; }

  private:
    const std::vector<Member>& members_;
    int radius_;
    std::unordered_map<std::uint64_t, std::unordered_set<std::string>> cache_;
};

bool subset(const std::unordered_set<std::string>& a, const std::unordered_set<std::string>& b) {
    for (const auto& k : a)
        if (!b.count(k)) return false;
    return true;
}

}  // namespace

FamilyReport analyze_family(const std::vector<Member>& members, int window) {
    const std::size_t n = members.size();
    int maxf = 2;
    for (const auto& m : members) maxf = std::max(maxf, m.feature);
    const int big = 2 * maxf;
    Windows windows(members, big + maxf);

    FamilyReport r;
    for (const auto& m : members) r.names.push_back(m.name);
    r.leq.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.leq[i][j] = subset(windows.get(i, big, big), windows.get(j, big, big));

    auto eq = [&](std::size_t i, std::size_t j) { return r.leq[i][j] && r.leq[j][i]; };
    std::vector<std::size_t> cls_of(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (cls_of[i] != n) continue;
        r.classes.push_back({});
        for (std::size_t j = i; j < n; ++j)
            if (cls_of[j] == n && eq(i, j)) {
                cls_of[j] = r.classes.size() - 1;
                r.classes.back().push_back(j);
            }
    }
    const std::size_t k = r.classes.size();
    auto lt = [&](std::size_t a, std::size_t b) {
        const auto i = r.classes[a][0], j = r.classes[b][0];
        return r.leq[i][j] && !r.leq[j][i];
    };
    for (std::size_t a = 0; a < k; ++a) {
        bool lo = true, hi = true;
        for (std::size_t b = 0; b < k; ++b) {
            if (lt(b, a)) lo = false;
            if (lt(a, b)) hi = false;
        }
        if (lo) r.minimal.push_back(a);
        if (hi) r.maximal.push_back(a);
        for (std::size_t b = 0; b < k; ++b) {
            if (!lt(a, b)) continue;
            bool direct = true;
            for (std::size_t c = 0; c < k; ++c)
                if (lt(a, c) && lt(c, b)) direct = false;
            if (direct) r.covers.push_back({a, b});
        }
    }
    // Levels by repeated relaxation; chains are short.
    std::vector<int> lvl(k, 0);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b)
                if (lt(b, a) && lvl[a] < lvl[b] + 1) {
                    lvl[a] = lvl[b] + 1;
                    changed = true;
                }
    }
    for (std::size_t i = 0; i < n; ++i) r.level.push_back(lvl[cls_of[i]]);
    r.longest_chain = k ? *std::max_element(lvl.begin(), lvl.end()) + 1 : 0;

    // Cantor-Bendixson iteration.
    std::vector<bool> active(n, true);
    r.rank.assign(n, 0);
    const int far = 2 * windows.radius() + maxf;
    std::map<std::pair<std::size_t, std::pair<int, int>>, bool> period_memo;
    auto is_period = [&](std::size_t i, int vx, int vy) {
        auto key = std::make_pair(i, std::make_pair(vx, vy));
        auto it = period_memo.find(key);
        if (it != period_memo.end()) return it->second;
        bool same = true;
        for (int x = -far; x <= far && same; ++x)
            for (int y = -far; y <= far && same; ++y) same = members[i].cell(x + vx, y + vy) == members[i].cell(x, y);
        period_memo.emplace(key, same);
        return same;
    };
    auto isolated = [&](std::size_t x) {
        const int m = std::max(window, members[x].feature);
        const int rad = windows.radius();
        for (int w = 1; w <= m; ++w)
            for (int h = 1; h <= m; ++h)
                for (const auto& key : windows.get(x, w, h)) {
                    bool unique = true;
                    for (std::size_t y = 0; y < n && unique; ++y)
                        if (y != x && active[y] && !eq(x, y) && windows.get(y, w, h).count(key)) unique = false;
                    if (!unique) continue;
                    std::vector<std::pair<int, int>> occ;
                    for (int px = -rad; px <= rad; ++px)
                        for (int py = -rad; py <= rad; ++py)
                            if (windows.at(x, px, py, w, h) == key) occ.push_back({px, py});
                    bool orbit = true;
                    for (const auto& o : occ) {
                        if (!is_period(x, o.first - occ[0].first, o.second - occ[0].second)) {
                            orbit = false;
                            break;
                        }
                    }
                    if (orbit) return true;
                }
        return false;
    };
    for (int round = 1;; ++round) {
        std::vector<std::size_t> gone;
        for (std::size_t x = 0; x < n; ++x)
            if (active[x] && isolated(x)) gone.push_back(x);
        if (gone.empty()) break;
        for (auto x : gone) {
            active[x] = false;
            r.rank[x] = round;
        }
        r.family_rank = round;
    }
    return r;
}

}  // namespace oracle
