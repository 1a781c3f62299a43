#include "brauerdm/brauer.hpp"

#include <algorithm>

namespace brauerdm {

int BrauerDiagram::propagating() const {
    int count = 0;
    for (const auto& pr : pairs)
        if (pr.first <= n_top && pr.second > n_top) ++count;
    return count;
}

BrauerDiagram make_diagram(int n_top, int n_bot, std::vector<std::pair<int, int>> pairs) {
    if (n_top < 0 || n_bot < 0) throw PreconditionViolated("point counts must be nonnegative");
    const int total = n_top + n_bot;
    if (static_cast<int>(pairs.size()) * 2 != total)
        throw PreconditionViolated("pair list does not cover the points");
    std::vector<char> used(total + 1, 0);
    for (auto& pr : pairs) {
        if (pr.first > pr.second) std::swap(pr.first, pr.second);
        if (pr.first < 1 || pr.second > total || pr.first == pr.second)
            throw PreconditionViolated("pair endpoint out of range");
        if (used[pr.first] || used[pr.second])
            throw PreconditionViolated("point used twice");
        used[pr.first] = used[pr.second] = 1;
    }
    std::sort(pairs.begin(), pairs.end());
    return BrauerDiagram{n_top, n_bot, std::move(pairs)};
}

BrauerDiagram identity_diagram(int n) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(n);
    for (int i = 1; i <= n; ++i) pairs.push_back({i, n + i});
    return BrauerDiagram{n, n, std::move(pairs)};
}

BrauerDiagram transposition_diagram(int n, int i) {
    if (i < 1 || i + 1 > n) throw PreconditionViolated("strand index out of range");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(n);
    for (int k = 1; k <= n; ++k) {
        if (k == i) pairs.push_back({k, n + i + 1});
        else if (k == i + 1) pairs.push_back({k, n + i});
        else pairs.push_back({k, n + k});
    }
    return BrauerDiagram{n, n, std::move(pairs)};
}

BrauerDiagram cup_cap_diagram(int n, int i) {
    if (i < 1 || i + 1 > n) throw PreconditionViolated("strand index out of range");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(n);
    pairs.push_back({i, i + 1});
    for (int k = 1; k <= n; ++k)
        if (k != i && k != i + 1) pairs.push_back({k, n + k});
    pairs.push_back({n + i, n + i + 1});
    std::sort(pairs.begin(), pairs.end());
    return BrauerDiagram{n, n, std::move(pairs)};
}

BrauerDiagram flip(const BrauerDiagram& d) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(d.pairs.size());
    for (const auto& pr : d.pairs) {
        auto mirror = [&](int v) { return v <= d.n_top ? d.n_bot + v : v - d.n_top; };
        int x = mirror(pr.first), y = mirror(pr.second);
        pairs.push_back({std::min(x, y), std::max(x, y)});
    }
    std::sort(pairs.begin(), pairs.end());
    return BrauerDiagram{d.n_bot, d.n_top, std::move(pairs)};
}

Composite compose(const BrauerDiagram& a, const BrauerDiagram& b) {
    if (a.n_bot != b.n_top)
        throw PreconditionViolated("interface sizes differ");
    const int p = a.n_top, m = a.n_bot, q = b.n_bot;
    std::vector<int> pa(p + m + 1, 0), pb(m + q + 1, 0);
    for (const auto& pr : a.pairs) { pa[pr.first] = pr.second; pa[pr.second] = pr.first; }
    for (const auto& pr : b.pairs) { pb[pr.first] = pr.second; pb[pr.second] = pr.first; }

    // walk alternately through a and b until an outer point is reached;
    // every middle point touched on the way is marked
    std::vector<char> seen(m + 1, 0);
    auto trace = [&](int side, int v) {
        for (;;) {
            if (side == 0) {
                int w = pa[v];
                if (w <= p) return w;
                seen[w - p] = 1;
                side = 1;
                v = w - p;
            } else {
                int w = pb[v];
                if (w > m) return p + (w - m);
                seen[w] = 1;
                side = 0;
                v = p + w;
            }
        }
    };

    // outer points: 1..p are a's upper points, p+1..p+q are b's lower points
    std::vector<char> done(p + q + 1, 0);
    std::vector<std::pair<int, int>> out;
    for (int e = 1; e <= p + q; ++e) {
        if (done[e]) continue;
        int f = e <= p ? trace(0, e) : trace(1, m + (e - p));
        done[e] = done[f] = 1;
        out.push_back({std::min(e, f), std::max(e, f)});
    }
    std::sort(out.begin(), out.end());

    // unmarked middle points lie on closed loops, alternating b- and a-pairs
    int loops = 0;
    for (int k = 1; k <= m; ++k) {
        if (seen[k]) continue;
        int v = k;
        do {
            seen[v] = 1;
            int w = pb[v];
            seen[w] = 1;
            v = pa[p + w] - p;
        } while (v != k);
        ++loops;
    }
    return Composite{loops, BrauerDiagram{p, q, std::move(out)}};
}

namespace {

void matchings_rec(int total, std::vector<char>& used,
                   std::vector<std::pair<int, int>>& acc,
                   const std::function<void(const std::vector<std::pair<int, int>>&)>& visit) {
    int v = 1;
    while (v <= total && used[v]) ++v;
    if (v > total) {
        visit(acc);
        return;
    }
    used[v] = 1;
    for (int w = v + 1; w <= total; ++w) {
        if (used[w]) continue;
        used[w] = 1;
        acc.push_back({v, w});
        matchings_rec(total, used, acc, visit);
        acc.pop_back();
        used[w] = 0;
    }
    used[v] = 0;
}

}  // namespace

void enumerate_diagrams(int n, const std::function<void(const BrauerDiagram&)>& visit) {
    if (n < 0) throw PreconditionViolated("size must be nonnegative");
    std::vector<char> used(2 * n + 1, 0);
    std::vector<std::pair<int, int>> acc;
    acc.reserve(n);
    // the smallest-open-point recursion emits pairs already in canonical order
    matchings_rec(2 * n, used, acc, [&](const std::vector<std::pair<int, int>>& pairs) {
        visit(BrauerDiagram{n, n, pairs});
    });
}

namespace {

void subsets_rec(int n, int from, int need, std::vector<int>& acc,
                 const std::function<void(const std::vector<int>&)>& visit) {
    if (need == 0) {
        visit(acc);
        return;
    }
    for (int v = from; v + need - 1 <= n; ++v) {
        acc.push_back(v);
        subsets_rec(n, v + 1, need - 1, acc, visit);
        acc.pop_back();
    }
}

}  // namespace

std::vector<BrauerDiagram> half_diagrams(int n, int l) {
    if (l < 0 || l > n || (n - l) % 2 != 0)
        throw ParityError("lower count must not exceed the upper count and must match its parity");
    std::vector<BrauerDiagram> out;
    std::vector<int> chosen;
    subsets_rec(n, 1, l, chosen, [&](const std::vector<int>& s) {
        std::vector<std::pair<int, int>> prop;
        std::vector<char> used(n + 1, 0);
        for (int k = 0; k < l; ++k) {
            prop.push_back({s[k], n + k + 1});
            used[s[k]] = 1;
        }
        std::vector<std::pair<int, int>> acc;
        matchings_rec(n, used, acc, [&](const std::vector<std::pair<int, int>>& arcs) {
            std::vector<std::pair<int, int>> pairs = prop;
            pairs.insert(pairs.end(), arcs.begin(), arcs.end());
            std::sort(pairs.begin(), pairs.end());
            out.push_back(BrauerDiagram{n, l, std::move(pairs)});
        });
    });
    return out;
}

namespace {

long long ipow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

AlgebraElement multiply(long long delta, const BrauerDiagram& a, const BrauerDiagram& b) {
    Composite c = compose(a, b);
    AlgebraElement out;
    long long coeff = ipow(delta, c.loops);
    if (coeff != 0) out[c.d] = coeff;
    return out;
}

AlgebraElement multiply(long long delta, const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out;
    for (const auto& [da, ca] : a) {
        for (const auto& [db, cb] : b) {
            Composite c = compose(da, db);
            long long coeff = ca * cb * ipow(delta, c.loops);
            if (coeff == 0) continue;
            auto it = out.find(c.d);
            if (it == out.end()) {
                out[c.d] = coeff;
            } else {
                it->second += coeff;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

}  // namespace brauerdm
