#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "brauerdm/errors.hpp"

namespace brauerdm {

// perfect matching on n_top upper points and n_bot lower points;
// upper point i is vertex i (1-based), lower point j is vertex n_top + j;
// pairs are stored sorted within and between, so equal matchings compare equal
struct BrauerDiagram {
    int n_top = 0;
    int n_bot = 0;
    std::vector<std::pair<int, int>> pairs;

    friend bool operator==(const BrauerDiagram&, const BrauerDiagram&) = default;
    friend bool operator<(const BrauerDiagram& a, const BrauerDiagram& b) {
        if (a.n_top != b.n_top) return a.n_top < b.n_top;
        if (a.n_bot != b.n_bot) return a.n_bot < b.n_bot;
        return a.pairs < b.pairs;
    }

    // number of pairs joining an upper point to a lower point
    int propagating() const;
};

// validates that the pairs form a perfect matching, then canonicalizes
BrauerDiagram make_diagram(int n_top, int n_bot, std::vector<std::pair<int, int>> pairs);

// vertical strands only
BrauerDiagram identity_diagram(int n);

// crossing of strands i and i+1, all other strands vertical
BrauerDiagram transposition_diagram(int n, int i);

// upper arc {i,i+1} over lower arc {i,i+1}, all other strands vertical
BrauerDiagram cup_cap_diagram(int n, int i);

// top-bottom mirror image; swaps the roles of upper and lower points
BrauerDiagram flip(const BrauerDiagram& d);

// stacking a over b: a's lower points are glued to b's upper points,
// closed loops formed in the middle are removed and counted
struct Composite {
    int loops = 0;
    BrauerDiagram d;
};
Composite compose(const BrauerDiagram& a, const BrauerDiagram& b);

// visits every matching with n upper and n lower points exactly once,
// in a deterministic order; there are (2n-1)!! of them
void enumerate_diagrams(int n, const std::function<void(const BrauerDiagram&)>& visit);

// all diagrams with n upper and l lower points in which every lower point
// lies on a propagating line and no two propagating lines cross;
// there are binomial(n,l) * (n-l-1)!! of them
std::vector<BrauerDiagram> half_diagrams(int n, int l);

// formal integer combination of diagrams of a common size
using AlgebraElement = std::map<BrauerDiagram, long long>;

// product at integer parameter delta: each closed loop contributes a factor delta
AlgebraElement multiply(long long delta, const BrauerDiagram& a, const BrauerDiagram& b);
AlgebraElement multiply(long long delta, const AlgebraElement& a, const AlgebraElement& b);

}  // namespace brauerdm
