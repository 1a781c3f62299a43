#include "brauerdm/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "brauerdm/decomp.hpp"
#include "brauerdm/errors.hpp"
#include "brauerdm/evengraph.hpp"
#include "brauerdm/klpoly.hpp"
#include "brauerdm/oracle.hpp"
#include "brauerdm/tlcube.hpp"
#include "brauerdm/valley.hpp"
#include "brauerdm/young.hpp"

namespace brauerdm {

namespace {

Partition P(const std::string& s) { return Partition::parse(s); }
RankSet S(const std::string& s) { return RankSet::parse(s); }

// accumulates one named check; the first failure freezes the detail string
struct Check {
    CheckResult r;
    long long count = 0;

    explicit Check(std::string name) { r.name = std::move(name); }

    void expect(bool cond, const std::string& site) {
        ++count;
        if (!cond && r.ok) {
            r.ok = false;
            r.detail = site;
        }
    }

    CheckResult done(const std::string& unit) {
        if (r.ok) r.detail = std::to_string(count) + " " + unit;
        return r;
    }
};

RankSet subset_of_range(unsigned mask, int top) {
    std::vector<int> elems;
    for (int i = 1; i <= top; ++i)
        if (mask & (1u << (i - 1))) elems.push_back(i);
    return RankSet{std::move(elems)};
}

std::vector<RankSet> even_subsets(int top) {
    std::vector<RankSet> out;
    for (unsigned mask = 0; mask < (1u << top); ++mask)
        if (__builtin_popcount(mask) % 2 == 0) out.push_back(subset_of_range(mask, top));
    std::sort(out.begin(), out.end());
    return out;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    std::vector<int> classes() {
        std::vector<int> out(parent.size());
        for (size_t i = 0; i < parent.size(); ++i) out[i] = find(static_cast<int>(i));
        return out;
    }
};

// path endpoints of a rim: boxes edge-adjacent to at most one other rim box
std::vector<Box> rim_ends(const std::vector<Box>& rim) {
    std::vector<Box> out;
    for (const Box& b : rim) {
        int deg = 0;
        for (const Box& c : rim)
            deg += (std::abs(b.row - c.row) + std::abs(b.col - c.col)) == 1;
        if (deg <= 1) out.push_back(b);
    }
    return out;
}

std::set<std::vector<int>> parts_of(const TLDiagram& d) {
    std::set<std::vector<int>> out;
    for (const auto& [i, j] : d.arcs) out.insert({i, j});
    for (int s : d.singletons) out.insert({s});
    return out;
}

Partition add_to_box(const Partition& lam, const Box& b) {
    std::vector<int> parts = lam.parts();
    if (b.row <= lam.length())
        parts[b.row - 1] += 1;
    else
        parts.push_back(1);
    return Partition(std::move(parts));
}

std::string site(int delta, const Partition& lam) {
    return "delta " + std::to_string(delta) + " " + lam.to_string();
}

}  // namespace

bool all_ok(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (!r.ok) return false;
    return true;
}

std::vector<CheckResult> verify_examples() {
    std::vector<CheckResult> out;

    {
        Check c("map values");
        c.expect(rank_set(2, P("-")) == S("-"), "delta 2 empty");
        c.expect(rank_set(2, P("3.3")) == S("1,2"), "delta 2 3.3");
        c.expect(rank_set(0, P("3.3.3.1")) == S("1,2"), "delta 0 3.3.3.1");
        c.expect(rank_set(0, P("4.3.3.1")) == S("-"), "delta 0 4.3.3.1");
        c.expect(rank_set(2, P("7.7.6.5.3.2")) == S("1,3,5,6"), "delta 2 7.7.6.5.3.2");

        auto r1 = regularize(weight_seq(2, P("2.1")));
        c.expect(r1.size() >= 3 && r1[0].doubled == -6 && r1[0].index == 3 &&
                     r1[1].doubled == -8 && r1[2].doubled == -10,
                 "regularized sequence of 2.1 at delta 2");
        auto r2 = regularize(weight_seq(0, P("4.4.3.3.3")));
        c.expect(r2.size() >= 5 && r2[0].doubled == 8 && r2[0].index == 1 &&
                     r2[1].doubled == 6 && r2[2].doubled == 0 && r2[2].index == 4 &&
                     r2[3].doubled == -10 && r2[4].doubled == -12,
                 "regularized sequence of 4.4.3.3.3 at delta 0");
        out.push_back(c.done("values"));
    }

    {
        Check c("cube of {3,4}");
        Hypercube h = hypercube(S("3,4"));
        c.expect(h.dim() == 2 && h.depth.size() == 4, "size");
        c.expect(h.depth.at(S("3,4")) == 0 && h.depth.at(S("2,4")) == 1 &&
                     h.depth.at(S("1,3")) == 1 && h.depth.at(S("1,2")) == 2,
                 "depths");
        out.push_back(c.done("checks"));
    }

    {
        Check c("cube of {1,3,5,6} with labels");
        Hypercube h = hypercube(S("1,3,5,6"));
        c.expect(h.depth.size() == 8, "size");
        const std::map<RankSet, int> want = {
            {S("1,3,5,6"), 0}, {S("1,2,5,6"), 1}, {S("1,3,4,6"), 1}, {S("3,5"), 1},
            {S("1,2,4,6"), 2}, {S("2,5"), 2},     {S("3,4"), 2},     {S("2,4"), 3}};
        for (const auto& [v, d] : want)
            c.expect(h.depth.count(v) == 1 && h.depth.at(v) == d, "depth of " + v.to_string());

        // partition labelling of every vertex at parameter 2
        const Partition anchor = P("7.7.6.5.3.2");
        const std::map<std::string, std::string> labels = {
            {"{1,3,5,6}", "7.7.6.5.3.2"}, {"{1,2,5,6}", "7.7.5.5.2.2"},
            {"{1,3,4,6}", "7.6.6.5.3.1"}, {"{3,5}", "6.5.2.2.1"},
            {"{1,2,4,6}", "7.6.5.5.2.1"}, {"{2,5}", "6.4.2.1.1"},
            {"{3,4}", "5.5.2.2"},         {"{2,4}", "5.4.2.1"}};
        for (const auto& [v, lam] : labels)
            c.expect(rank_set_inverse(2, anchor, RankSet::parse(v)) == P(lam),
                     "label of " + v);
        out.push_back(c.done("checks"));
    }

    {
        Check c("cube row of 4.4.2.2");
        DecompRow row = decomp_row(1, P("4.4.2.2"));
        std::map<Partition, int, PartitionBefore> want;
        want[P("4.4.2.2")] = 0;
        want[P("4.3.2.1")] = 1;
        want[P("3.2.1")] = 1;
        want[P("2.2")] = 2;
        c.expect(row.support == want, "support");
        out.push_back(c.done("checks"));
    }

    {
        Check c("cube of {1,7,8,10,11}");
        Hypercube h = hypercube(S("1,7,8,10,11"));
        c.expect(h.dim() == 4 && h.depth.size() == 16, "size");
        std::set<std::pair<int, int>> gens;
        for (const Arc& g : h.generators) gens.insert({g.i, g.j});
        c.expect(gens == std::set<std::pair<int, int>>{{6, 7}, {9, 10}, {5, 8}, {4, 11}},
                 "generator arcs");
        std::map<int, int> by_depth;
        for (const auto& [v, d] : h.depth) ++by_depth[d];
        c.expect(by_depth == std::map<int, int>{{0, 1}, {1, 4}, {2, 6}, {3, 4}, {4, 1}},
                 "depth profile");
        out.push_back(c.done("checks"));
    }

    return out;
}

std::vector<CheckResult> verify_kl(int top) {
    Check closed("rows equal cube depths in {1.." + std::to_string(top) + "}");
    Check parents("rows agree along every incoming edge");
    KlTable table;
    for (const RankSet& a : even_subsets(top)) {
        closed.expect(kl_equals_cube(a), a.to_string());
        if (a.empty()) continue;
        const PolyRow& want = table.row(a);
        int incoming = 0;
        for (const EvenEdge& e : even_graph_neighbors(a)) {
            if (!(e.upper == a)) continue;
            ++incoming;
            parents.expect(kl_row_step(table.row(e.lower), e) == want,
                           a.to_string() + " via label " + std::to_string(e.label));
        }
        parents.expect(incoming >= 1, a.to_string() + " has no incoming edge");
    }
    return {closed.done("rows"), parents.done("recomputations")};
}

std::vector<CheckResult> verify_blocks(int max_n) {
    Check c("orbit partition equals closure of covers, n <= " + std::to_string(max_n));
    for (int delta = -2; delta <= 4; ++delta)
        for (int n = 0; n <= max_n; ++n) {
            std::vector<Partition> labels = cell_labels(n);
            size_t k = labels.size();
            UnionFind by_orbit(k), by_cover(k);
            for (size_t i = 0; i < k; ++i)
                for (size_t j = i + 1; j < k; ++j) {
                    if (same_block(delta, labels[i], labels[j]))
                        by_orbit.unite(static_cast<int>(i), static_cast<int>(j));
                    for (auto [big, small] : {std::pair{i, j}, std::pair{j, i}})
                        if (labels[big].contains(labels[small]) &&
                            is_minimal_balanced(delta, labels[big], labels[small]))
                            by_cover.unite(static_cast<int>(i), static_cast<int>(j));
                }
            // same classes iff the class vectors induce the same partition
            std::vector<int> a = by_orbit.classes(), b = by_cover.classes();
            std::map<int, int> ab, ba;
            bool same = true;
            for (size_t i = 0; i < k; ++i) {
                if (ab.count(a[i]) && ab[a[i]] != b[i]) same = false;
                if (ba.count(b[i]) && ba[b[i]] != a[i]) same = false;
                ab[a[i]] = b[i];
                ba[b[i]] = a[i];
            }
            c.expect(same, "delta " + std::to_string(delta) + " n " + std::to_string(n));
        }
    return {c.done("label sets")};
}

std::vector<CheckResult> verify_mibs(int max_m) {
    Check c("cover test agrees with the witness oracle in the size-" +
            std::to_string(max_m) + " label set");
    std::vector<Partition> labels = cell_labels(max_m);
    for (int delta = -2; delta <= 4; ++delta)
        for (const Partition& lam : labels)
            for (const Partition& mu : labels) {
                if (mu == lam || !lam.contains(mu)) continue;
                c.expect(is_minimal_balanced(delta, lam, mu) ==
                             is_minimal_balanced_geometric(delta, lam, mu),
                         site(delta, lam) + " over " + mu.to_string());
            }
    return {c.done("pairs")};
}

std::vector<CheckResult> verify_dims(int max_n) {
    Check id("cell dimension identity, n <= " + std::to_string(max_n));
    for (int delta = -1; delta <= 3; ++delta)
        for (int n = 0; n <= max_n; ++n) {
            try {
                DimReport rep = verify_dim_identity(delta, n);
                id.expect(rep.ok, "delta " + std::to_string(delta) + " n " + std::to_string(n));
            } catch (const Error& e) {
                id.expect(false, std::string("threw: ") + e.what());
            }
        }

    Check sq("square sums match the double factorial, n <= 8");
    for (int n = 0; n <= 8; ++n) {
        long long sum = 0;
        for (const Partition& lam : cell_labels(n)) {
            long long d = dim_cell(n, lam);
            sum += d * d;
        }
        sq.expect(sum == double_factorial(2 * n - 1), "n " + std::to_string(n));
    }
    return {id.done("reports"), sq.done("sizes")};
}

std::vector<CheckResult> verify_sections() {
    Check c("delta 0 rows of the n = 4 matrix in module labels");
    DecompMatrix mod = decomp_matrix(0, 4, Convention::module_);
    for (const Partition& r : mod.row_labels)
        c.expect(!r.empty(), "empty label owns a row");
    c.expect(mod.row_labels.size() + 1 == mod.col_labels.size(), "row/column counts");

    auto row_support = [&](const std::string& label) {
        std::map<std::string, int> sup;
        for (size_t r = 0; r < mod.row_labels.size(); ++r) {
            if (mod.row_labels[r].to_string() != label) continue;
            for (size_t cc = 0; cc < mod.col_labels.size(); ++cc)
                if (mod.present(r, cc)) sup[mod.col_labels[cc].to_string()] = mod.depth[r][cc];
        }
        return sup;
    };
    c.expect(row_support("2") == std::map<std::string, int>{{"2", 0}, {"-", 1}},
             "row of 2");
    c.expect(row_support("3.1") == std::map<std::string, int>{{"3.1", 0}, {"2", 1}},
             "row of 3.1");
    return {c.done("checks")};
}

std::vector<CheckResult> verify_props(int max_n) {
    std::vector<CheckResult> out;

    {
        Check c("triangular matrices with cube-sized rows, n <= " + std::to_string(max_n));
        for (int delta = -2; delta <= 4; ++delta)
            for (int n = 0; n <= max_n; ++n) {
                DecompMatrix m = decomp_matrix(delta, n, Convention::primed);
                for (size_t r = 0; r < m.row_labels.size(); ++r) {
                    const Partition& lam = m.row_labels[r];
                    size_t on = 0;
                    for (size_t cc = 0; cc < m.col_labels.size(); ++cc) {
                        if (!m.present(r, cc)) continue;
                        ++on;
                        const Partition& mu = m.col_labels[cc];
                        if (mu == lam)
                            c.expect(m.depth[r][cc] == 0, site(delta, lam) + " diagonal");
                        else
                            c.expect(mu.sum() < lam.sum() && m.depth[r][cc] >= 1,
                                     site(delta, lam) + " support at " + mu.to_string());
                        c.expect(same_block(delta, lam, mu),
                                 site(delta, lam) + " crosses blocks at " + mu.to_string());
                    }
                    c.expect(on >= 1 && (on & (on - 1)) == 0,
                             site(delta, lam) + " support size");
                }
            }
        out.push_back(c.done("rows"));
    }

    {
        Check c("stability up the tower, n <= " + std::to_string(max_n));
        for (int delta = -2; delta <= 4; ++delta)
            for (int n = 0; n <= max_n; ++n) {
                DecompMatrix small = decomp_matrix(delta, n, Convention::primed);
                DecompMatrix large = decomp_matrix(delta, n + 2, Convention::primed);
                std::map<Partition, size_t, PartitionBefore> lrow, lcol;
                for (size_t r = 0; r < large.row_labels.size(); ++r)
                    lrow[large.row_labels[r]] = r;
                for (size_t cc = 0; cc < large.col_labels.size(); ++cc)
                    lcol[large.col_labels[cc]] = cc;
                for (size_t r = 0; r < small.row_labels.size(); ++r) {
                    // the empty row survives only at the foot of the tower when
                    // delta = 0: the idempotent carrying rows upward vanishes
                    if (delta == 0 && n == 0 && small.row_labels[r].empty()) continue;
                    const std::string where =
                        site(delta, small.row_labels[r]) + " n " + std::to_string(n);
                    if (!lrow.count(small.row_labels[r])) {
                        c.expect(false, where + " row missing above");
                        continue;
                    }
                    size_t lr = lrow[small.row_labels[r]];
                    size_t small_on = 0, large_on = 0;
                    for (size_t cc = 0; cc < small.col_labels.size(); ++cc) {
                        small_on += small.present(r, cc);
                        size_t lc = lcol[small.col_labels[cc]];
                        c.expect(small.depth[r][cc] == large.depth[lr][lc],
                                 where + " at " + small.col_labels[cc].to_string());
                    }
                    for (size_t cc = 0; cc < large.col_labels.size(); ++cc)
                        large_on += large.present(lr, cc);
                    c.expect(small_on == large_on, where + " support grew");
                }
            }
        out.push_back(c.done("rows"));
    }

    {
        Check c("singularity step at rim ends, sizes <= 12");
        for (int delta = -3; delta <= 4; ++delta)
            for (int m = 1; m <= 12; ++m)
                for (const Partition& lam : partitions_of(m))
                    for (const Partition& mu : block_down_neighbors(delta, lam)) {
                        auto w = minimal_balanced_witness(delta, lam, mu);
                        if (!w.has_value()) {
                            c.expect(false, site(delta, lam) + " cover without witness");
                            continue;
                        }
                        size_t skew_size = 2 * w->rim.size();
                        std::vector<Box> removable = lam.removable_boxes();
                        for (const std::vector<Box>& rim : {w->rim, w->rim_image})
                            for (const Box& e : rim_ends(rim)) {
                                if (std::find(removable.begin(), removable.end(), e) ==
                                    removable.end())
                                    continue;
                                int before = singularity_degree(delta, lam);
                                int after = singularity_degree(delta,
                                                               lam.remove_from_row(e.row));
                                c.expect(after == before + (skew_size == 2 ? 1 : 0),
                                         site(delta, lam) + " box row " +
                                             std::to_string(e.row));
                            }
                    }
        out.push_back(c.done("boxes"));
    }

    {
        Check c("equal singularity at a box removal forces equal sets, sizes <= 12");
        for (int delta = -3; delta <= 4; ++delta)
            for (int m = 1; m <= 12; ++m)
                for (const Partition& lam : partitions_of(m))
                    for (const Box& b : lam.removable_boxes()) {
                        Partition smaller = lam.remove_from_row(b.row);
                        if (singularity_degree(delta, lam) !=
                            singularity_degree(delta, smaller))
                            continue;
                        c.expect(rank_set(delta, lam) == rank_set(delta, smaller),
                                 site(delta, lam) + " box row " + std::to_string(b.row));
                    }
        out.push_back(c.done("boxes"));
    }

    {
        Check c("adjacent swap splices diagram parts, sets in {1..12}");
        for (unsigned mask = 0; mask < (1u << 12); ++mask) {
            RankSet a = subset_of_range(mask, 12);
            TLDiagram da = tl_diagram(to_binary(a));
            for (const Arc& g : gamma_lower(a)) {
                RankSet b = arc_apply(a, g);
                TLDiagram db = tl_diagram(to_binary(b));
                int n = std::max(g.j, std::max(to_binary(a).size(), to_binary(b).size()));
                auto pad = [n](TLDiagram d, const BinWord& w) {
                    for (int pos = w.size() + 1; pos <= n; ++pos) d.singletons.push_back(pos);
                    std::sort(d.singletons.begin(), d.singletons.end());
                    return d;
                };
                std::set<std::vector<int>> pa = parts_of(pad(da, to_binary(a)));
                std::set<std::vector<int>> pb = parts_of(pad(db, to_binary(b)));
                std::vector<int> px, py;
                for (const std::vector<int>& part : pb) {
                    if (std::count(part.begin(), part.end(), g.i)) px = part;
                    if (std::count(part.begin(), part.end(), g.j)) py = part;
                }
                const std::string where = a.to_string() + " arc (" + std::to_string(g.i) +
                                          " " + std::to_string(g.j) + ")";
                if (px.empty() || py.empty() || px == py) {
                    c.expect(false, where + " endpoints not split");
                    continue;
                }
                std::set<std::vector<int>> expect = pb;
                expect.erase(px);
                expect.erase(py);
                expect.insert({g.i, g.j});
                std::vector<int> rest;
                for (int e : px)
                    if (e != g.i) rest.push_back(e);
                for (int e : py)
                    if (e != g.j) rest.push_back(e);
                std::sort(rest.begin(), rest.end());
                if (!rest.empty()) expect.insert(rest);
                c.expect(pa == expect, where);
            }
        }
        out.push_back(c.done("swaps"));
    }

    {
        Check c("restriction dimensions, n <= 8");
        for (int n = 1; n <= 8; ++n) {
            std::vector<Partition> below = cell_labels(n - 1);
            auto in_below = [&](const Partition& p) {
                return std::find(below.begin(), below.end(), p) != below.end();
            };
            for (const Partition& lam : cell_labels(n)) {
                long long sum = 0;
                for (const Box& b : lam.removable_boxes()) {
                    Partition mu = lam.remove_from_row(b.row);
                    if (in_below(mu)) sum += dim_cell(n - 1, mu);
                }
                for (const Box& b : lam.addable_boxes()) {
                    Partition mu = add_to_box(lam, b);
                    if (in_below(mu)) sum += dim_cell(n - 1, mu);
                }
                c.expect(sum == dim_cell(n, lam),
                         "n " + std::to_string(n) + " " + lam.to_string());
            }
        }
        out.push_back(c.done("labels"));
    }

    return out;
}

std::vector<CheckResult> verify_homs(int max_m, const std::vector<int>& deltas) {
    std::vector<CheckResult> out;

    {
        Check c("exceptional n = 2 pair at delta 0");
        c.expect(hom_dim(0, 2, P("2"), P("-")) == 1, "map into the empty label");
        c.expect(hom_dim(0, 2, P("-"), P("2")) == 1, "map out of the empty label");
        out.push_back(c.done("checks"));
    }

    Check c("nonzero map at every cover pair in the size-" + std::to_string(max_m) +
            " label set");
    std::vector<Partition> labels = cell_labels(max_m);
    for (int delta : deltas)
        for (const Partition& lam : labels)
            for (const Partition& mu : labels) {
                if (mu == lam || !lam.contains(mu)) continue;
                if (!is_minimal_balanced(delta, lam, mu)) continue;
                long long d =
                    hom_dim(delta, max_m, lam.conjugate(), mu.conjugate());
                c.expect(d >= 1, site(delta, lam) + " over " + mu.to_string());
            }
    out.push_back(c.done("pairs"));
    return out;
}

}  // namespace brauerdm
