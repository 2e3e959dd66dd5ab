#include "tilings/core.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace tilings {

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    if (tokens_.empty()) throw UsageError("alphabet must not be empty");
    if (tokens_.size() > std::numeric_limits<State>::max())
        throw UsageError("alphabet has too many states");
    std::set<std::string> seen;
    for (const auto& t : tokens_) {
        if (t.empty()) throw UsageError("alphabet token must not be empty");
        if (!seen.insert(t).second) throw UsageError("duplicate alphabet token '" + t + "'");
    }
}

std::optional<State> Alphabet::find(std::string_view token) const {
    for (std::size_t i = 0; i < tokens_.size(); ++i)
        if (tokens_[i] == token) return static_cast<State>(i);
    return std::nullopt;
}

AlphabetRef make_alphabet(std::vector<std::string> tokens) {
    return std::make_shared<const Alphabet>(std::move(tokens));
}

bool same_alphabet(const AlphabetRef& a, const AlphabetRef& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

// ---------------------------------------------------------------------------

Pattern::Pattern(AlphabetRef alphabet, std::vector<Cell> cells)
    : alphabet_(std::move(alphabet)), cells_(std::move(cells)) {
    if (!alphabet_) throw UsageError("pattern needs an alphabet");
    if (cells_.empty()) throw UsageError("pattern must not be empty");
    std::sort(cells_.begin(), cells_.end());
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (cells_[i].second >= alphabet_->size()) throw UsageError("pattern state out of range");
        if (i > 0 && cells_[i - 1].first == cells_[i].first)
            throw UsageError("pattern defines a cell twice");
    }
}

Pattern Pattern::from_grid(AlphabetRef alphabet, int width, int height,
                           std::span<const State> column_major) {
    if (width < 1 || height < 1 ||
        column_major.size() != static_cast<std::size_t>(width) * height)
        throw UsageError("grid dimensions do not match data");
    std::vector<Cell> cells;
    cells.reserve(column_major.size());
    for (int x = 0; x < width; ++x)
        for (int y = 0; y < height; ++y)
            cells.emplace_back(Vec2{x, y}, column_major[static_cast<std::size_t>(x) * height + y]);
    return Pattern(std::move(alphabet), std::move(cells));
}

std::optional<State> Pattern::at(Vec2 pos) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), pos,
                               [](const Cell& c, Vec2 p) { return c.first < p; });
    if (it == cells_.end() || it->first != pos) return std::nullopt;
    return it->second;
}

std::vector<Vec2> Pattern::domain() const {
    std::vector<Vec2> out;
    out.reserve(cells_.size());
    for (const auto& [pos, s] : cells_) out.push_back(pos);
    return out;
}

Vec2 Pattern::min_corner() const {
    Vec2 m = cells_.front().first;
    for (const auto& [pos, s] : cells_) m = {std::min(m.x, pos.x), std::min(m.y, pos.y)};
    return m;
}

Vec2 Pattern::max_corner() const {
    Vec2 m = cells_.front().first;
    for (const auto& [pos, s] : cells_) m = {std::max(m.x, pos.x), std::max(m.y, pos.y)};
    return m;
}

Pattern Pattern::translated(Vec2 t) const {
    Pattern out = *this;
    for (auto& [pos, s] : out.cells_) pos = pos + t;
    return out;
}

bool operator==(const Pattern& a, const Pattern& b) {
    return a.cells_ == b.cells_ && same_alphabet(a.alphabet_, b.alphabet_);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Vec2> normalized_domain(std::vector<Vec2> dom) {
    if (dom.empty()) throw UsageError("shape must not be empty");
    int mx = dom.front().x, my = dom.front().y;
    for (const Vec2& v : dom) {
        mx = std::min(mx, v.x);
        my = std::min(my, v.y);
    }
    for (Vec2& v : dom) v = v - Vec2{mx, my};
    std::sort(dom.begin(), dom.end());
    if (std::adjacent_find(dom.begin(), dom.end()) != dom.end())
        throw UsageError("shape contains a cell twice");
    return dom;
}

std::uint64_t checked_power(std::size_t base, std::size_t exp) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / base)
            throw UsageError("shape too large for the alphabet");
        r *= base;
    }
    return r;
}

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;

}  // namespace

TileSet::TileSet(AlphabetRef alphabet, std::vector<ShapeRule> rules)
    : alphabet_(std::move(alphabet)) {
    if (!alphabet_) throw UsageError("tile-set needs an alphabet");
    if (rules.empty()) throw UsageError("tile-set needs at least one shape");

    // Canonical form: normalized domains, tuples sorted, shapes sorted by domain.
    for (auto& rule : rules) {
        auto original = rule.domain;
        auto dom = normalized_domain(original);
        if (dom.size() != original.size()) throw UsageError("bad shape");
        // Re-order tuple entries to follow the normalized, sorted domain.
        int mx = original.front().x, my = original.front().y;
        for (const Vec2& v : original) {
            mx = std::min(mx, v.x);
            my = std::min(my, v.y);
        }
        std::vector<std::size_t> perm(dom.size());
        for (std::size_t i = 0; i < dom.size(); ++i) {
            Vec2 shifted = original[i] - Vec2{mx, my};
            perm[i] = static_cast<std::size_t>(
                std::lower_bound(dom.begin(), dom.end(), shifted) - dom.begin());
        }
        std::vector<std::vector<State>> tuples;
        tuples.reserve(rule.allowed.size());
        for (const auto& t : rule.allowed) {
            if (t.size() != dom.size()) throw UsageError("allowed pattern does not match its shape");
            std::vector<State> re(dom.size());
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (t[i] >= alphabet_->size()) throw UsageError("allowed pattern state out of range");
                re[perm[i]] = t[i];
            }
            tuples.push_back(std::move(re));
        }
        std::sort(tuples.begin(), tuples.end());
        tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
        rule.domain = std::move(dom);
        rule.allowed = std::move(tuples);
    }
    std::sort(rules.begin(), rules.end(),
              [](const ShapeRule& a, const ShapeRule& b) { return a.domain < b.domain; });
    for (std::size_t i = 1; i < rules.size(); ++i)
        if (rules[i - 1].domain == rules[i].domain) throw UsageError("duplicate shape in tile-set");
    rules_ = std::move(rules);

    lookup_.resize(rules_.size());
    for (std::size_t s = 0; s < rules_.size(); ++s) {
        const auto& rule = rules_[s];
        std::uint64_t universe = checked_power(alphabet_->size(), rule.domain.size());
        if (universe <= kDenseLimit) lookup_[s].dense.assign(universe, 0);
        for (const auto& t : rule.allowed) {
            std::uint64_t code = 0, radix = 1;
            for (State v : t) {
                code += radix * v;
                radix *= alphabet_->size();
            }
            if (!lookup_[s].dense.empty())
                lookup_[s].dense[code] = 1;
            else
                lookup_[s].sparse.insert(code);
        }
        for (const Vec2& v : rule.domain) {
            max_width_ = std::max(max_width_, v.x + 1);
            max_height_ = std::max(max_height_, v.y + 1);
        }
    }
}

TileSet TileSet::from_allowed(AlphabetRef alphabet, const std::vector<Pattern>& allowed) {
    std::map<std::vector<Vec2>, ShapeRule> by_shape;
    for (const Pattern& p : allowed) {
        if (p.empty()) throw UsageError("allowed pattern must not be empty");
        if (!same_alphabet(p.alphabet(), alphabet)) throw UsageError("alphabet mismatch");
        Pattern n = normalize(p);
        auto& rule = by_shape[n.domain()];
        rule.domain = n.domain();
        std::vector<State> tuple;
        for (const auto& [pos, s] : n.cells()) tuple.push_back(s);
        rule.allowed.push_back(std::move(tuple));
    }
    std::vector<ShapeRule> rules;
    for (auto& [dom, rule] : by_shape) rules.push_back(std::move(rule));
    return TileSet(std::move(alphabet), std::move(rules));
}

TileSet TileSet::from_forbidden(AlphabetRef alphabet, const std::vector<Pattern>& forbidden) {
    std::map<std::vector<Vec2>, std::set<std::vector<State>>> by_shape;
    for (const Pattern& p : forbidden) {
        if (p.empty()) throw UsageError("forbidden pattern must not be empty");
        if (!same_alphabet(p.alphabet(), alphabet)) throw UsageError("alphabet mismatch");
        Pattern n = normalize(p);
        std::vector<State> tuple;
        for (const auto& [pos, s] : n.cells()) tuple.push_back(s);
        by_shape[n.domain()].insert(std::move(tuple));
    }
    std::vector<ShapeRule> rules;
    const std::size_t q = alphabet->size();
    for (const auto& [dom, banned] : by_shape) {
        ShapeRule rule{dom, {}};
        std::uint64_t universe = checked_power(q, dom.size());
        std::vector<State> tuple(dom.size(), 0);
        for (std::uint64_t code = 0; code < universe; ++code) {
            std::uint64_t c = code;
            for (auto& v : tuple) {
                v = static_cast<State>(c % q);
                c /= q;
            }
            if (!banned.contains(tuple)) rule.allowed.push_back(tuple);
        }
        rules.push_back(std::move(rule));
    }
    return TileSet(std::move(alphabet), std::move(rules));
}

std::uint64_t TileSet::universe_size(std::size_t shape) const {
    return checked_power(alphabet_->size(), rules_.at(shape).domain.size());
}

bool TileSet::allows(std::size_t shape, std::span<const State> tuple) const {
    const auto& dom = rules_.at(shape).domain;
    if (tuple.size() != dom.size()) throw UsageError("tuple does not match shape");
    std::uint64_t code = 0, radix = 1;
    for (State v : tuple) {
        code += radix * v;
        radix *= alphabet_->size();
    }
    return allowed_code(shape, code);
}

std::vector<Pattern> TileSet::allowed_patterns(std::size_t shape) const {
    const auto& rule = rules_.at(shape);
    std::vector<Pattern> out;
    out.reserve(rule.allowed.size());
    for (const auto& t : rule.allowed) {
        std::vector<Cell> cells;
        for (std::size_t i = 0; i < t.size(); ++i) cells.emplace_back(rule.domain[i], t[i]);
        out.emplace_back(alphabet_, std::move(cells));
    }
    return out;
}

TileSet TileSet::transposed() const {
    std::vector<ShapeRule> rules;
    for (const auto& rule : rules_) {
        ShapeRule t{{}, rule.allowed};
        for (const Vec2& v : rule.domain) t.domain.push_back({v.y, v.x});
        rules.push_back(std::move(t));
    }
    return TileSet(alphabet_, std::move(rules));
}

// ---------------------------------------------------------------------------

bool appears_in(const Pattern& needle, const Pattern& haystack) {
    if (needle.empty() || haystack.empty()) throw UsageError("appears_in needs nonempty patterns");
    if (!same_alphabet(needle.alphabet(), haystack.alphabet())) throw UsageError("alphabet mismatch");
    const Vec2 nlo = needle.min_corner(), nhi = needle.max_corner();
    const Vec2 hlo = haystack.min_corner(), hhi = haystack.max_corner();
    for (int tx = hlo.x - nlo.x; tx <= hhi.x - nhi.x; ++tx) {
        for (int ty = hlo.y - nlo.y; ty <= hhi.y - nhi.y; ++ty) {
            bool ok = true;
            for (const auto& [pos, s] : needle.cells()) {
                auto v = haystack.at(pos + Vec2{tx, ty});
                if (!v || *v != s) {
                    ok = false;
                    break;
                }
            }
            if (ok) return true;
        }
    }
    return false;
}

Pattern normalize(const Pattern& p) {
    if (p.empty()) throw UsageError("cannot normalize an empty pattern");
    return p.translated(-p.min_corner());
}

std::vector<std::vector<Pattern>> to_forbidden(const TileSet& ts) {
    std::vector<std::vector<Pattern>> out;
    const std::size_t q = ts.alphabet()->size();
    for (std::size_t s = 0; s < ts.shape_count(); ++s) {
        const auto& dom = ts.rules()[s].domain;
        std::vector<Pattern> forb;
        std::vector<State> tuple(dom.size(), 0);
        // Enumerate Q^D in lexicographic order of the tuple (first cell most significant).
        const std::uint64_t universe = ts.universe_size(s);
        for (std::uint64_t code = 0; code < universe; ++code) {
            std::uint64_t c = code;
            for (std::size_t i = dom.size(); i-- > 0;) {
                tuple[i] = static_cast<State>(c % q);
                c /= q;
            }
            if (!ts.allows(s, tuple)) {
                std::vector<Cell> cells;
                for (std::size_t i = 0; i < dom.size(); ++i) cells.emplace_back(dom[i], tuple[i]);
                forb.emplace_back(ts.alphabet(), std::move(cells));
            }
        }
        out.push_back(std::move(forb));
    }
    return out;
}

bool check_torus(const TileSet& ts, const TorusTiling& t) {
    if (t.p < 1 || t.q < 1 || t.block.size() != static_cast<std::size_t>(t.p) * t.q)
        throw UsageError("torus block dimensions do not match");
    for (State s : t.block)
        if (s >= ts.alphabet()->size()) throw UsageError("torus state out of range");
    auto cell = [&](Vec2 v) { return t.at(v.x, v.y); };
    for (std::size_t s = 0; s < ts.shape_count(); ++s)
        for (int x = 0; x < t.p; ++x)
            for (int y = 0; y < t.q; ++y)
                if (!ts.allows_at(s, {x, y}, cell)) return false;
    return true;
}

}  // namespace tilings
