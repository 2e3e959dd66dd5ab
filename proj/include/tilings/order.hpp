#pragma once

// The extraction preorder on presented tilings: x <= y when every pattern of
// x also occurs in y.
//
// Pattern inclusion is decided on square windows. Inclusion at size m implies
// inclusion at every smaller size, and for grid presentations it is final
// once m reaches both structural bounds, so comparisons run at the effective
// window max(n, bound(x), bound(y)) for a requested window n.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tilings/core.hpp"
#include "tilings/presentation.hpp"

namespace tilings {

struct NamedTiling {
    std::string name;
    GridPresentation tiling;
};

class TilingFamily {
  public:
    /// Requires distinct names, one alphabet, and window >= 1.
    TilingFamily(AlphabetRef alphabet, std::vector<NamedTiling> members, int window);

    /// Additionally checks that every member is a tiling of `ts` and that the
    /// window covers every shape.
    static TilingFamily validated(const TileSet& ts, std::vector<NamedTiling> members, int window);

    const AlphabetRef& alphabet() const { return alphabet_; }
    const std::vector<NamedTiling>& members() const { return members_; }
    const NamedTiling& member(std::size_t i) const { return members_.at(i); }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    int window() const { return window_; }

    std::optional<std::size_t> index_of(const std::string& name) const;
    /// Members at the given indices, in the given order.
    TilingFamily subset(const std::vector<std::size_t>& keep) const;

  private:
    AlphabetRef alphabet_;
    std::vector<NamedTiling> members_;
    int window_;
};

int effective_window(const GridPresentation& x, const GridPresentation& y, int n);

/// Literal inclusion of the n x n pattern sets, without window adjustment.
bool pattern_inclusion(const GridPresentation& x, const GridPresentation& y, int n);

struct PreceqReport {
    bool holds = false;
    int window = 0;       // effective window used
    bool stable = false;  // same answer at window + 1
};

PreceqReport preceq_report(const GridPresentation& x, const GridPresentation& y, int n);
bool preceq(const GridPresentation& x, const GridPresentation& y, int n);

struct HasseDiagram {
    /// Member indices of each node (an equivalence class), in family order.
    std::vector<std::vector<std::size_t>> nodes;
    /// Covering pairs (lower node, upper node), sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// The preorder restricted to one family, computed once.
class FamilyOrder {
  public:
    /// `threads` > 1 spreads window extraction and pairwise comparisons over
    /// worker threads; results do not depend on it.
    explicit FamilyOrder(const TilingFamily& family, std::size_t threads = 1);

    std::size_t size() const { return leq_.size(); }
    bool leq(std::size_t i, std::size_t j) const { return leq_[i][j] != 0; }
    bool less(std::size_t i, std::size_t j) const { return leq(i, j) && !leq(j, i); }
    bool equivalent(std::size_t i, std::size_t j) const { return leq(i, j) && leq(j, i); }
    /// True when every comparison gave the same answer one window larger.
    bool stable() const { return stable_; }

    /// Classes of mutual preceq, ordered by first member; each lists member
    /// indices in family order.
    const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
    std::size_t class_of(std::size_t member) const { return class_of_[member]; }
    bool class_less(std::size_t a, std::size_t b) const { return less(classes_[a][0], classes_[b][0]); }

    HasseDiagram hasse() const;
    std::vector<std::size_t> minimal_classes() const;
    std::vector<std::size_t> maximal_classes() const;
    /// Length of the longest strictly decreasing chain of classes below the
    /// member's class (0 for minimal classes).
    int level_of(std::size_t member) const;
    /// Number of classes in the longest strict chain.
    int longest_chain() const;

  private:
    std::vector<std::vector<char>> leq_;
    bool stable_ = true;
    std::vector<std::vector<std::size_t>> classes_;
    std::vector<std::size_t> class_of_;
};

std::vector<std::vector<std::size_t>> equivalence_classes(const TilingFamily& f);
HasseDiagram hasse(const TilingFamily& f);
/// Member lists of the minimal (resp. maximal) classes.
std::vector<std::vector<std::size_t>> minimal_classes(const TilingFamily& f);
std::vector<std::vector<std::size_t>> maximal_classes(const TilingFamily& f);
int level_of(const TilingFamily& f, std::size_t member);

}  // namespace tilings
