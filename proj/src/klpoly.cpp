#include "brauerdm/klpoly.hpp"

#include <set>

#include "brauerdm/errors.hpp"
#include "brauerdm/tlcube.hpp"

namespace brauerdm {

namespace {

// scratch Laurent polynomial, exponent to coefficient, zero terms erased
using Poly = std::map<int, long long>;

void add_term(Poly& p, int exponent, long long coeff) {
    auto [it, fresh] = p.emplace(exponent, coeff);
    if (!fresh && (it->second += coeff) == 0) p.erase(it);
}

// one incoming edge from below, used as the recursion parent
EvenEdge parent_edge(const RankSet& a) {
    if (a.contains(1) && a.contains(2)) return {a.without(1).without(2), a, 0};
    for (int alpha = 1; alpha <= a.max(); ++alpha)
        if (!a.contains(alpha) && a.contains(alpha + 1))
            return {a.without(alpha + 1).with(alpha), a, alpha};
    throw InternalError("nonempty set with no incoming edge");
}

}  // namespace

PolyRow kl_row_step(const PolyRow& below, const EvenEdge& edge) {
    if (!(edge.lower == below.owner))
        throw PreconditionViolated("edge must ascend from the row owner");

    // targets that can receive a value: the support below and its neighbors
    // along the edge label
    std::set<RankSet> targets;
    for (const auto& [d, k] : below.entries) {
        targets.insert(d);
        if (auto step = even_graph_step(d, edge.label)) targets.insert(step->neighbor);
    }

    PolyRow out;
    out.owner = edge.upper;
    for (const RankSet& d : targets) {
        auto step = even_graph_step(d, edge.label);
        if (!step) continue;  // no edge at d: the term vanishes
        Poly value;
        if (auto it = below.entries.find(d); it != below.entries.end())
            add_term(value, it->second + (step->above ? 1 : -1), 1);
        if (auto it = below.entries.find(step->neighbor); it != below.entries.end())
            add_term(value, it->second, 1);
        if (value.empty()) continue;
        if (value.size() != 1 || value.begin()->second != 1)
            throw InternalError("row entry is not a plain power of v");
        int k = value.begin()->first;
        if (k < 0) throw InternalError("row entry with negative exponent");
        if (k == 0 && !(d == out.owner))
            throw InternalError("constant entry off the diagonal; the correction sum must stay empty");
        out.entries.emplace(d, k);
    }
    auto diag = out.entries.find(out.owner);
    if (diag == out.entries.end() || diag->second != 0)
        throw InternalError("row lacks a unit diagonal entry");
    return out;
}

const PolyRow& KlTable::row(const RankSet& a) {
    if (a.size() % 2 != 0)
        throw PreconditionViolated("rows are indexed by sets of even order");
    auto it = memo_.find(a);
    if (it != memo_.end()) return it->second;
    PolyRow r;
    if (a.empty()) {
        r.owner = a;
        r.entries.emplace(a, 0);
    } else {
        EvenEdge up = parent_edge(a);
        r = kl_row_step(row(up.lower), up);
    }
    return memo_.emplace(a, std::move(r)).first->second;
}

PolyRow kl_row(const RankSet& a) {
    KlTable table;
    return table.row(a);
}

bool kl_equals_cube(const RankSet& a) {
    PolyRow r = kl_row(a);
    Hypercube h = hypercube(a);
    if (r.entries.size() != h.depth.size()) return false;
    for (const auto& [vertex, depth] : h.depth) {
        auto it = r.entries.find(vertex);
        if (it == r.entries.end() || it->second != depth) return false;
    }
    return true;
}

}  // namespace brauerdm
