#include "tilings/order.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace tilings {

namespace {

bool keys_included(const WindowSet& a, const WindowSet& b) {
    if (a.size() > b.size()) return false;
    for (const auto& k : a)
        if (!b.count(k)) return false;
    return true;
}

// Runs task(0..count-1) on up to `threads` workers.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& task) {
    threads = std::min(std::max<std::size_t>(threads, 1), count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    task(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

// ---------------------------------------------------------------------------

TilingFamily::TilingFamily(AlphabetRef alphabet, std::vector<NamedTiling> members, int window)
    : alphabet_(std::move(alphabet)), members_(std::move(members)), window_(window) {
    if (!alphabet_) throw UsageError("family needs an alphabet");
    if (window_ < 1) throw UsageError("window must be at least 1");
    std::set<std::string> names;
    for (const auto& m : members_) {
        if (m.name.empty()) throw UsageError("family member without a name");
        if (!names.insert(m.name).second) throw UsageError("duplicate family member: " + m.name);
        if (!same_alphabet(m.tiling.alphabet(), alphabet_))
            throw UsageError("family member " + m.name + " uses another alphabet");
    }
}

TilingFamily TilingFamily::validated(const TileSet& ts, std::vector<NamedTiling> members, int window) {
    TilingFamily f(ts.alphabet(), std::move(members), window);
    if (window < ts.max_width() || window < ts.max_height())
        throw UsageError("window is smaller than a tile-set shape");
    for (const auto& m : f.members_)
        if (!is_valid(m.tiling, ts)) throw UsageError("family member " + m.name + " is not a valid tiling");
    return f;
}

std::optional<std::size_t> TilingFamily::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < members_.size(); ++i)
        if (members_[i].name == name) return i;
    return std::nullopt;
}

TilingFamily TilingFamily::subset(const std::vector<std::size_t>& keep) const {
    std::vector<NamedTiling> out;
    out.reserve(keep.size());
    for (auto i : keep) out.push_back(members_.at(i));
    return TilingFamily(alphabet_, std::move(out), window_);
}

// ---------------------------------------------------------------------------

int effective_window(const GridPresentation& x, const GridPresentation& y, int n) {
    if (n < 1) throw UsageError("window must be at least 1");
    return std::max({n, x.structural_bound(), y.structural_bound()});
}

bool pattern_inclusion(const GridPresentation& x, const GridPresentation& y, int n) {
    if (!same_alphabet(x.alphabet(), y.alphabet())) throw UsageError("alphabet mismatch");
    return keys_included(window_keys(x, n, n), window_keys(y, n, n));
}

PreceqReport preceq_report(const GridPresentation& x, const GridPresentation& y, int n) {
    PreceqReport r;
    r.window = effective_window(x, y, n);
    r.holds = pattern_inclusion(x, y, r.window);
    r.stable = pattern_inclusion(x, y, r.window + 1) == r.holds;
    return r;
}

bool preceq(const GridPresentation& x, const GridPresentation& y, int n) {
    if (!same_alphabet(x.alphabet(), y.alphabet())) throw UsageError("alphabet mismatch");
    return pattern_inclusion(x, y, effective_window(x, y, n));
}

// ---------------------------------------------------------------------------

FamilyOrder::FamilyOrder(const TilingFamily& family, std::size_t threads) {
    const std::size_t n = family.size();
    std::vector<int> own(n);
    for (std::size_t i = 0; i < n; ++i)
        own[i] = std::max(family.window(), family.member(i).tiling.structural_bound());

    // Window sets needed: member i at every pair window max(own_i, own_j) and
    // one larger for the stability check.
    std::map<std::pair<std::size_t, int>, std::size_t> slot;
    std::vector<std::pair<std::size_t, int>> jobs;
    auto need = [&](std::size_t i, int m) {
        if (slot.emplace(std::pair{i, m}, jobs.size()).second) jobs.push_back({i, m});
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const int m = std::max(own[i], own[j]);
            need(i, m);
            need(i, m + 1);
        }
    std::vector<WindowSet> sets(jobs.size());
    parallel_for(jobs.size(), threads, [&](std::size_t k) {
        const auto [i, m] = jobs[k];
        sets[k] = window_keys(family.member(i).tiling, m, m);
    });

    leq_.assign(n, std::vector<char>(n, 0));
    std::vector<char> stable(n * n, 1);
    parallel_for(n * n, threads, [&](std::size_t k) {
        const std::size_t i = k / n, j = k % n;
        if (i == j) {
            leq_[i][j] = 1;
            return;
        }
        const int m = std::max(own[i], own[j]);
        const bool at_m = keys_included(sets[slot.at({i, m})], sets[slot.at({j, m})]);
        const bool at_next = keys_included(sets[slot.at({i, m + 1})], sets[slot.at({j, m + 1})]);
        leq_[i][j] = at_m ? 1 : 0;
        stable[k] = at_m == at_next ? 1 : 0;
    });
    stable_ = std::all_of(stable.begin(), stable.end(), [](char c) { return c != 0; });

    class_of_.assign(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (class_of_[i] != n) continue;
        std::vector<std::size_t> cls{i};
        class_of_[i] = classes_.size();
        for (std::size_t j = i + 1; j < n; ++j)
            if (class_of_[j] == n && equivalent(i, j)) {
                class_of_[j] = classes_.size();
                cls.push_back(j);
            }
        classes_.push_back(std::move(cls));
    }
}

HasseDiagram FamilyOrder::hasse() const {
    HasseDiagram d;
    d.nodes = classes_;
    const std::size_t k = classes_.size();
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            if (!class_less(a, b)) continue;
            bool covers = true;
            for (std::size_t c = 0; c < k && covers; ++c)
                if (class_less(a, c) && class_less(c, b)) covers = false;
            if (covers) d.edges.push_back({a, b});
        }
    return d;
}

std::vector<std::size_t> FamilyOrder::minimal_classes() const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < classes_.size(); ++a) {
        bool minimal = true;
        for (std::size_t b = 0; b < classes_.size() && minimal; ++b) minimal = !class_less(b, a);
        if (minimal) out.push_back(a);
    }
    return out;
}

std::vector<std::size_t> FamilyOrder::maximal_classes() const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < classes_.size(); ++a) {
        bool maximal = true;
        for (std::size_t b = 0; b < classes_.size() && maximal; ++b) maximal = !class_less(a, b);
        if (maximal) out.push_back(a);
    }
    return out;
}

int FamilyOrder::level_of(std::size_t member) const {
    const std::size_t k = classes_.size();
    std::vector<int> level(k, -1);
    auto rec = [&](auto&& self, std::size_t a) -> int {
        if (level[a] >= 0) return level[a];
        int best = 0;
        for (std::size_t b = 0; b < k; ++b)
            if (class_less(b, a)) best = std::max(best, self(self, b) + 1);
        return level[a] = best;
    };
    return rec(rec, class_of_.at(member));
}

int FamilyOrder::longest_chain() const {
    int best = 0;
    for (const auto& cls : classes_) best = std::max(best, level_of(cls[0]) + 1);
    return best;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<std::size_t>> equivalence_classes(const TilingFamily& f) {
    return FamilyOrder(f).classes();
}

HasseDiagram hasse(const TilingFamily& f) { return FamilyOrder(f).hasse(); }

namespace {
std::vector<std::vector<std::size_t>> member_lists(const FamilyOrder& o, const std::vector<std::size_t>& ids) {
    std::vector<std::vector<std::size_t>> out;
    for (auto c : ids) out.push_back(o.classes()[c]);
    return out;
}
}  // namespace

std::vector<std::vector<std::size_t>> minimal_classes(const TilingFamily& f) {
    FamilyOrder o(f);
    return member_lists(o, o.minimal_classes());
}

std::vector<std::vector<std::size_t>> maximal_classes(const TilingFamily& f) {
    FamilyOrder o(f);
    return member_lists(o, o.maximal_classes());
}

int level_of(const TilingFamily& f, std::size_t member) {
    if (member >= f.size()) throw UsageError("member index out of range");
    return FamilyOrder(f).level_of(member);
}

}  // namespace tilings
