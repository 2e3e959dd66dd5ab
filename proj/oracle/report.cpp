// Prints every brute-force reference value used by the test suites.

#include <chrono>
#include <iostream>

#include "brute.hpp"

namespace {

void family_section(int maxi, int window) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto members = oracle::stripes_family(maxi);
    const auto r = oracle::analyze_family(members, window);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "\n== stripes family i <= " << maxi << ", window " << window << " (" << secs << " s)\n";
    std::cout << "classes " << r.classes.size() << " of " << members.size() << " members\n";
    auto label = [&](std::size_t c) { return r.names[r.classes[c][0]]; };
    std::cout << "minimal:";
    for (auto c : r.minimal) std::cout << ' ' << label(c);
    std::cout << "\nmaximal:";
    for (auto c : r.maximal) std::cout << ' ' << label(c);
    std::cout << "\nstrictly above all-white:";
    for (std::size_t j = 0; j < members.size(); ++j)
        if (r.leq[2][j] && !r.leq[j][2]) std::cout << ' ' << r.names[j];
    std::cout << "\ncovers:";
    for (auto [a, b] : r.covers) std::cout << ' ' << label(a) << "<" << label(b);
    std::cout << "\nlevels:";
    for (std::size_t i = 0; i < members.size(); ++i) std::cout << ' ' << r.names[i] << '=' << r.level[i];
    std::cout << "\nlongest chain: " << r.longest_chain << "\nranks:";
    for (std::size_t i = 0; i < members.size(); ++i) std::cout << ' ' << r.names[i] << '=' << r.rank[i];
    std::cout << "\nfamily rank: " << r.family_rank << '\n';
}

}  // namespace

int main() {
    std::cout.setf(std::ios::unitbuf);
    const auto stripes = oracle::stripes();
    const auto checker = oracle::checkerboard();
    std::cout << "== admissible squares\n";
    for (int n = 1; n <= 4; ++n) std::cout << "stripes n=" << n << ": " << oracle::count_admissible(stripes, n) << '\n';
    for (int n = 1; n <= 5; ++n) std::cout << "checkerboard n=" << n << ": " << oracle::count_admissible(checker, n) << '\n';
    std::cout << "stripes extensible n=2 m=3: " << oracle::count_extensible(stripes, 2, 3) << '\n';
    oracle::Dominoes row_only{2, {{false, true}, {false, false}}, {{true, true}, {true, true}}};
    std::cout << "hpair ab only: admissible n=1: " << oracle::count_admissible(row_only, 1)
              << ", extensible n=1 m=1: " << oracle::count_extensible(row_only, 1, 1)
              << ", admissible n=3: " << oracle::count_admissible(row_only, 3) << '\n';

    std::cout << "\n== torus blocks (p x q)\n";
    for (int p = 1; p <= 4; ++p)
        for (int q = 1; q <= 4; ++q) {
            if (p * q > 9) continue;
            std::cout << "stripes " << p << "x" << q << ": " << oracle::count_torus_blocks(stripes, p, q)
                      << "  checkerboard: " << oracle::count_torus_blocks(checker, p, q) << '\n';
        }
    std::cout << "\n== torus classes\n";
    for (auto [name, d, mp] : {std::tuple{"stripes", stripes, 4}, std::tuple{"checkerboard", checker, 2},
                               std::tuple{"checkerboard", checker, 1}}) {
        const auto cls = oracle::torus_classes(d, mp, mp);
        std::cout << name << " max " << mp << ": " << cls.size() << " classes:";
        for (const auto& t : cls) {
            std::cout << ' ' << t.p << 'x' << t.q << '[';
            for (int c : t.cells) std::cout << c;
            std::cout << ']';
        }
        std::cout << '\n';
    }

    family_section(6, 6);
    family_section(6, 8);
    family_section(12, 8);
    return 0;
}
