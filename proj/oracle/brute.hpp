#pragma once

// Brute-force reference computations, written without any use of the tilings
// library. Everything here enumerates raw configurations directly; it is slow
// on purpose and only meant for small inputs.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace oracle {

/// Nearest-neighbour rules over states 0..q-1. h[l][r]: r may sit right of
/// l. v[t][b]: t may sit on top of b.
struct Dominoes {
    int q = 0;
    std::vector<std::vector<bool>> h;
    std::vector<std::vector<bool>> v;
};

Dominoes stripes();       // states R G W B = 0 1 2 3
Dominoes checkerboard();  // states a b = 0 1
/// Rules drawn from a seed: each of the 2q^2 pairs is allowed with
/// probability 1/2.
Dominoes random_dominoes(int q, std::uint64_t seed);

/// n x n squares in which every domino is allowed, by stacking valid rows.
std::uint64_t count_admissible(const Dominoes& d, int n);
/// n x n squares that are the center of some admissible (n + 2m) square.
std::uint64_t count_extensible(const Dominoes& d, int n, int m);

/// p x q blocks valid with wraparound on both axes, from all q^(pq) fillings.
std::uint64_t count_torus_blocks(const Dominoes& d, int p, int q);

/// Blocks are row-major, bottom row first.
struct Torus {
    int p;
    int q;
    std::vector<int> cells;
};

/// One representative per translation class of valid tori with p <= maxp
/// and q <= maxq, skipping tori that have a smaller period.
std::vector<Torus> torus_classes(const Dominoes& d, int maxp, int maxq);

/// True when every domino of the box [-r, r]^2 of `cell` is allowed.
bool valid_in_box(const Dominoes& d, const std::function<int(int, int)>& cell, int r);
/// Translations v with |v.x|, |v.y| <= k under which `cell` agrees with
/// itself on the box [-r, r]^2.
std::vector<std::pair<int, int>> periods_in_box(const std::function<int(int, int)>& cell, int k, int r);

// ---------------------------------------------------------------------------
// The red / green / white / black family, given by formulas.

struct Member {
    std::string name;
    std::function<int(int, int)> cell;
    int feature;  // size of the non-periodic structure plus two
};

/// Monochromes, the seven two- and three-region tilings, then B_1..B_maxi and
/// A_1..A_maxi.
std::vector<Member> stripes_family(int maxi);

struct FamilyReport {
    std::vector<std::string> names;
    std::vector<std::vector<bool>> leq;  // leq[i][j]: member i below member j
    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::size_t> minimal;  // class indices
    std::vector<std::size_t> maximal;
    std::vector<std::pair<std::size_t, std::size_t>> covers;  // class pairs
    std::vector<int> level;  // per member
    int longest_chain = 0;
    std::vector<int> rank;  // per member, 0 = never isolated
    int family_rank = 0;
};

/// Pattern inclusion is tested on every window up to a size well above all
/// features, over a box large enough to contain every distinct window.
/// Isolation looks for patterns up to max(window, feature) on a side.
FamilyReport analyze_family(const std::vector<Member>& members, int window);

}  // namespace oracle
