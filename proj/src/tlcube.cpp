#include "brauerdm/tlcube.hpp"

#include <algorithm>

#include "brauerdm/errors.hpp"

namespace brauerdm {

BinWord::BinWord(std::vector<int> bits) : bits_(std::move(bits)) {
    for (int b : bits_)
        if (b != 0 && b != 1) throw ParseError("binary words hold bits only");
    while (!bits_.empty() && bits_.back() == 0) bits_.pop_back();
}

BinWord BinWord::parse(const std::string& text) {
    if (text.empty() || text == "-") return BinWord{};
    std::vector<int> bits;
    for (char c : text) {
        if (c != '0' && c != '1') throw ParseError(std::string("bad word character: ") + c);
        bits.push_back(c - '0');
    }
    return BinWord{std::move(bits)};
}

std::string BinWord::to_string() const {
    if (bits_.empty()) return "-";
    std::string out;
    for (int b : bits_) out += static_cast<char>('0' + b);
    return out;
}

BinWord to_binary(const RankSet& a) {
    std::vector<int> bits(a.empty() ? 0 : a.max(), 0);
    for (int e : a.elems()) bits[e - 1] = 1;
    return BinWord{std::move(bits)};
}

RankSet from_binary(const BinWord& w) {
    std::vector<int> elems;
    for (int i = 1; i <= w.size(); ++i)
        if (w.bit(i)) elems.push_back(i);
    return RankSet{std::move(elems)};
}

TLDiagram tl_diagram(const BinWord& w) {
    TLDiagram d;
    std::vector<int> open;      // unmatched zero positions so far
    std::vector<int> leftover;  // unmatched one positions, in order
    for (int pos = 1; pos <= w.size(); ++pos) {
        if (w.bit(pos) == 0) {
            open.push_back(pos);
        } else if (!open.empty()) {
            d.arcs.push_back({open.back(), pos});
            open.pop_back();
        } else {
            leftover.push_back(pos);
        }
    }
    size_t paired = leftover.size() - leftover.size() % 2;
    for (size_t t = 0; t + 1 < leftover.size(); t += 2)
        d.arcs.push_back({leftover[t], leftover[t + 1]});
    for (size_t t = paired; t < leftover.size(); ++t) d.singletons.push_back(leftover[t]);
    d.singletons.insert(d.singletons.end(), open.begin(), open.end());
    std::sort(d.singletons.begin(), d.singletons.end());
    return d;
}

std::string TLDiagram::to_string() const {
    if (arcs.empty() && singletons.empty()) return "-";
    std::string out;
    for (const auto& [i, j] : arcs)
        out += "(" + std::to_string(i) + " " + std::to_string(j) + ")";
    for (int s : singletons) out += "[" + std::to_string(s) + "]";
    return out;
}

std::vector<Arc> gamma_all(const RankSet& a) {
    BinWord w = to_binary(a);
    TLDiagram d = tl_diagram(w);
    std::vector<Arc> out;
    for (const auto& [i, j] : d.arcs) {
        bool both = w.bit(i) == 1 && w.bit(j) == 1;
        out.push_back({i, j, both});
    }
    return out;
}

std::vector<Arc> gamma_lower(const RankSet& a) {
    std::vector<Arc> out;
    for (const Arc& g : gamma_all(a))
        if ((!g.both && g.j == g.i + 1) || (g.both && g.i == 1 && g.j == 2)) out.push_back(g);
    return out;
}

RankSet arc_apply(const RankSet& a, const Arc& g) {
    bool has_i = a.contains(g.i), has_j = a.contains(g.j);
    if (g.both) {
        if (has_i != has_j) throw NotApplicable("joint arc needs both endpoints or neither");
        return a.toggled(g.i).toggled(g.j);
    }
    if (has_i == has_j) throw NotApplicable("swap arc needs exactly one endpoint");
    return a.toggled(g.i).toggled(g.j);
}

Hypercube hypercube(const RankSet& a) {
    Hypercube h;
    h.root = a;
    h.generators = gamma_all(a);
    int k = h.dim();
    if (k > 24) throw InternalError("hypercube dimension out of supported range");
    std::vector<RankSet> by_mask(size_t{1} << k);
    for (size_t mask = 0; mask < by_mask.size(); ++mask) {
        RankSet v = a;
        for (int t = 0; t < k; ++t)
            if (mask & (size_t{1} << t)) v = arc_apply(v, h.generators[t]);
        h.depth[v] = static_cast<int>(__builtin_popcountll(mask));
        by_mask[mask] = std::move(v);
    }
    if (h.depth.size() != by_mask.size())
        throw InternalError("hypercube vertices are not pairwise distinct");
    for (size_t mask = 0; mask < by_mask.size(); ++mask)
        for (int t = 0; t < k; ++t)
            if (!(mask & (size_t{1} << t)))
                h.edges.push_back({by_mask[mask], by_mask[mask | (size_t{1} << t)], t});
    return h;
}

BinWord bump01(const BinWord& w, int alpha) { return to_binary(bump01(from_binary(w), alpha)); }
BinWord bump10(const BinWord& w, int alpha) { return to_binary(bump10(from_binary(w), alpha)); }

namespace {

RankSet bump_set(const RankSet& a, int alpha, int added) {
    if (alpha < 1) throw PreconditionViolated("bump position is 1-based");
    std::vector<int> elems;
    for (int e : a.elems()) elems.push_back(e >= alpha ? e + 2 : e);
    elems.push_back(added);
    return RankSet{std::move(elems)};
}

Arc bump_arc(const Arc& g, int alpha) {
    return {g.i >= alpha ? g.i + 2 : g.i, g.j >= alpha ? g.j + 2 : g.j, g.both};
}

Hypercube bump_cube(const Hypercube& h, int alpha, int added) {
    Hypercube out;
    out.root = bump_set(h.root, alpha, added);
    for (const Arc& g : h.generators) out.generators.push_back(bump_arc(g, alpha));
    for (const auto& [v, d] : h.depth) out.depth[bump_set(v, alpha, added)] = d;
    for (const Hypercube::Edge& e : h.edges)
        out.edges.push_back({bump_set(e.from, alpha, added), bump_set(e.to, alpha, added), e.gen});
    return out;
}

}  // namespace

RankSet bump01(const RankSet& a, int alpha) { return bump_set(a, alpha, alpha + 1); }
RankSet bump10(const RankSet& a, int alpha) { return bump_set(a, alpha, alpha); }
Hypercube bump01(const Hypercube& h, int alpha) { return bump_cube(h, alpha, alpha + 1); }
Hypercube bump10(const Hypercube& h, int alpha) { return bump_cube(h, alpha, alpha); }

Hypercube cube_double(const Hypercube& h, int alpha) {
    bool all01 = true, all11 = true;
    for (const auto& [v, d] : h.depth) {
        bool lo = v.contains(alpha), hi = v.contains(alpha + 1);
        all01 &= (!lo && hi);
        all11 &= (lo && hi);
    }
    if (!all01 && !all11)
        throw PreconditionViolated("doubling position must read 01 or 11 on every vertex");
    for (const Arc& g : h.generators)
        if (g.i == alpha || g.i == alpha + 1 || g.j == alpha || g.j == alpha + 1)
            throw PreconditionViolated("doubling position collides with a generator");
    Arc fresh{alpha, alpha + 1, all11};
    Hypercube out;
    out.root = h.root;
    out.generators = h.generators;
    out.generators.push_back(fresh);
    int t = h.dim();
    for (const auto& [v, d] : h.depth) {
        out.depth[v] = d;
        out.depth[arc_apply(v, fresh)] = d + 1;
        out.edges.push_back({v, arc_apply(v, fresh), t});
    }
    for (const Hypercube::Edge& e : h.edges) {
        out.edges.push_back(e);
        out.edges.push_back({arc_apply(e.from, fresh), arc_apply(e.to, fresh), e.gen});
    }
    if (out.depth.size() != 2 * h.depth.size())
        throw InternalError("doubled hypercube vertices are not pairwise distinct");
    return out;
}

}  // namespace brauerdm
