#pragma once

#include <optional>
#include <vector>

#include "brauerdm/rankset.hpp"

namespace brauerdm {

// Graph on finite even-order subsets of the positive integers.  Two kinds of
// edge, each recorded with its lower endpoint first:
//   label a >= 1 : lower \ upper = {a}, upper \ lower = {a+1}
//   label 0      : upper = lower + {1,2}  (pair creation at the boundary)
struct EvenEdge {
    RankSet lower;
    RankSet upper;
    int label = 0;
    friend bool operator==(const EvenEdge&, const EvenEdge&) = default;
};

// all edges incident to s, lower endpoint first; at most one edge per label
inline std::vector<EvenEdge> even_graph_neighbors(const RankSet& s) {
    std::vector<EvenEdge> out;
    if (!s.contains(1) && !s.contains(2)) out.push_back({s, s.with(1).with(2), 0});
    if (s.contains(1) && s.contains(2)) out.push_back({s.without(1).without(2), s, 0});
    for (int a : s.elems()) {
        if (!s.contains(a + 1)) out.push_back({s, s.without(a).with(a + 1), a});
        if (a >= 2 && !s.contains(a - 1)) out.push_back({s.without(a).with(a - 1), s, a - 1});
    }
    return out;
}

// neighbor of s along the given label together with its direction, if the
// label acts on s at all; "above" means the neighbor is the upper endpoint
struct EvenStep {
    RankSet neighbor;
    bool above = false;
};

inline std::optional<EvenStep> even_graph_step(const RankSet& s, int label) {
    if (label == 0) {
        bool has1 = s.contains(1), has2 = s.contains(2);
        if (!has1 && !has2) return EvenStep{s.with(1).with(2), true};
        if (has1 && has2) return EvenStep{s.without(1).without(2), false};
        return std::nullopt;
    }
    bool lo = s.contains(label), hi = s.contains(label + 1);
    if (lo == hi) return std::nullopt;
    if (lo) return EvenStep{s.without(label).with(label + 1), true};
    return EvenStep{s.without(label + 1).with(label), false};
}

// edge label with lower = b, upper = a, if the pair is an edge
inline std::optional<int> even_graph_edge_between(const RankSet& lower, const RankSet& upper) {
    for (const EvenEdge& e : even_graph_neighbors(upper))
        if (e.upper == upper && e.lower == lower) return e.label;
    return std::nullopt;
}

}  // namespace brauerdm
