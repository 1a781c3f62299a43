#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "brauerdm/rankset.hpp"

namespace brauerdm {

// Finite 0/1 word; bit i (1-based) records membership of i in a finite set.
// Trailing zeros are trimmed, so the final bit of a nonempty word is 1.
class BinWord {
  public:
    BinWord() = default;
    explicit BinWord(std::vector<int> bits);

    static BinWord parse(const std::string& text);  // "101011"; "" or "-" empty
    std::string to_string() const;                  // "-" when empty

    int size() const { return static_cast<int>(bits_.size()); }
    // 1-based; 0 beyond the end
    int bit(int pos) const { return (pos >= 1 && pos <= size()) ? bits_[pos - 1] : 0; }
    const std::vector<int>& bits() const { return bits_; }

    friend bool operator==(const BinWord&, const BinWord&) = default;

  private:
    std::vector<int> bits_;
};

BinWord to_binary(const RankSet& a);
RankSet from_binary(const BinWord& w);

// Planar matching of word positions: arcs are non-crossing pairs, no arc
// covers a singleton, arcs and singletons partition 1..size.
struct TLDiagram {
    std::vector<std::pair<int, int>> arcs;  // i<j, in completion order
    std::vector<int> singletons;            // ascending
    std::string to_string() const;          // "(3 4)(2 5)[1]", "-" when empty
};

// Match 0-as-opener against 1-as-closer (equivalently: repeatedly match
// adjacent 01 among survivors); leftover ones pair up adjacently from the
// left; all unmatched positions become singletons.
TLDiagram tl_diagram(const BinWord& w);

// Hypercube generator: an arc with its action kind.
//   both=false: exactly one endpoint is present and is swapped for the other
//   both=true:  the endpoints enter and leave the set together
struct Arc {
    int i = 0, j = 0;  // i < j
    bool both = false;
    friend bool operator==(const Arc&, const Arc&) = default;
};

// all arcs of the diagram of a, flagged by kind (matched arcs are swaps,
// leftover-ones pairs are joint toggles)
std::vector<Arc> gamma_all(const RankSet& a);
// the adjacent swap arcs {x,x+1} plus the {1,2} joint toggle when present
std::vector<Arc> gamma_lower(const RankSet& a);

RankSet arc_apply(const RankSet& a, const Arc& g);

// Graph of all subsets of a commuting generator list applied to a root set.
// 2^k pairwise distinct vertices; each edge raises depth by exactly 1.
struct Hypercube {
    struct Edge {
        RankSet from;
        RankSet to;
        int gen = 0;  // index into generators
    };

    RankSet root;
    std::vector<Arc> generators;
    std::unordered_map<RankSet, int, RankSetHash> depth;
    std::vector<Edge> edges;

    int dim() const { return static_cast<int>(generators.size()); }
};

Hypercube hypercube(const RankSet& a);

// insert bits 01 (resp. 10) at positions alpha, alpha+1, shifting higher
// positions up by two
BinWord bump01(const BinWord& w, int alpha);
BinWord bump10(const BinWord& w, int alpha);
RankSet bump01(const RankSet& a, int alpha);
RankSet bump10(const RankSet& a, int alpha);
// bump every vertex and every generator endpoint
Hypercube bump01(const Hypercube& h, int alpha);
Hypercube bump10(const Hypercube& h, int alpha);

// extend h by the generator {alpha, alpha+1}; every vertex must carry the
// same bit pattern there, 01 (swap) or 11 (joint toggle)
Hypercube cube_double(const Hypercube& h, int alpha);

}  // namespace brauerdm
