#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "brauerdm/brauer.hpp"
#include "brauerdm/decomp.hpp"
#include "brauerdm/errors.hpp"
#include "brauerdm/exactla.hpp"
#include "brauerdm/oracle.hpp"
#include "brauerdm/specht.hpp"
#include "brauerdm/young.hpp"

using namespace brauerdm;

namespace {

Partition P(const std::string& s) { return Partition::parse(s); }

BrauerDiagram D(int t, int b, std::vector<std::pair<int, int>> pairs) {
    return make_diagram(t, b, std::move(pairs));
}

BrauerDiagram random_diagram(int n, std::mt19937_64& rng) {
    std::vector<int> pts(2 * n);
    std::iota(pts.begin(), pts.end(), 1);
    std::shuffle(pts.begin(), pts.end(), rng);
    std::vector<std::pair<int, int>> pairs;
    for (int k = 0; k < n; ++k) pairs.push_back({pts[2 * k], pts[2 * k + 1]});
    return make_diagram(n, n, std::move(pairs));
}

using Mat = std::vector<std::vector<long long>>;

Mat dense_of(const std::vector<std::vector<std::pair<int, long long>>>& cols, int dim) {
    Mat m(dim, std::vector<long long>(dim, 0));
    for (int c = 0; c < dim; ++c)
        for (const auto& [r, v] : cols[c]) m[r][c] += v;
    return m;
}

Mat matmul(const Mat& a, const Mat& b) {
    const int n = static_cast<int>(a.size());
    Mat m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < n; ++j) m[i][j] += a[i][k] * b[k][j];
        }
    return m;
}

std::vector<std::vector<mpz_class>> specht_gram(const SpechtData& sd) {
    const int f = static_cast<int>(sd.polytabloids.size());
    std::vector<std::vector<mpz_class>> g(f, std::vector<mpz_class>(f, 0));
    for (int s = 0; s < f; ++s)
        for (int t = 0; t < f; ++t) {
            long long dot = 0;
            for (std::size_t i = 0; i < sd.tabloids.size(); ++i)
                dot += sd.polytabloids[s][i] * sd.polytabloids[t][i];
            g[s][t] = static_cast<long>(dot);
        }
    return g;
}

long long ip(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

TEST_CASE("diagram construction and composition") {
    BrauerDiagram id3 = identity_diagram(3);
    CHECK(id3.pairs == std::vector<std::pair<int, int>>{{1, 4}, {2, 5}, {3, 6}});
    CHECK(id3.propagating() == 3);

    BrauerDiagram s1 = transposition_diagram(3, 1);
    CHECK(s1.pairs == std::vector<std::pair<int, int>>{{1, 5}, {2, 4}, {3, 6}});
    Composite ss = compose(s1, s1);
    CHECK(ss.loops == 0);
    CHECK(ss.d == id3);

    BrauerDiagram u1 = cup_cap_diagram(2, 1);
    CHECK(u1.pairs == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
    CHECK(u1.propagating() == 0);
    Composite uu = compose(u1, u1);
    CHECK(uu.loops == 1);
    CHECK(uu.d == u1);

    Composite left = compose(identity_diagram(4), transposition_diagram(4, 2));
    CHECK(left.loops == 0);
    CHECK(left.d == transposition_diagram(4, 2));

    BrauerDiagram half = D(4, 2, {{1, 3}, {2, 5}, {4, 6}});
    CHECK(half.propagating() == 2);
    CHECK(flip(half) == D(2, 4, {{1, 4}, {2, 6}, {3, 5}}));
    CHECK(flip(flip(half)) == half);

    CHECK_THROWS_AS(make_diagram(2, 2, {{1, 2}, {2, 3}}), PreconditionViolated);
    CHECK_THROWS_AS(make_diagram(2, 2, {{1, 2}}), PreconditionViolated);
    CHECK_THROWS_AS(make_diagram(2, 2, {{1, 2}, {3, 5}}), PreconditionViolated);
    CHECK_THROWS_AS(compose(identity_diagram(2), identity_diagram(3)), PreconditionViolated);
}

TEST_CASE("diagram enumeration counts and validity") {
    for (int n = 0; n <= 7; ++n) {
        long long count = 0;
        enumerate_diagrams(n, [&](const BrauerDiagram&) { ++count; });
        CHECK(count == double_factorial(2 * n - 1));
    }
    std::set<BrauerDiagram> seen;
    enumerate_diagrams(4, [&](const BrauerDiagram& d) {
        std::vector<char> used(9, 0);
        for (const auto& [a, b] : d.pairs) {
            CHECK(!used[a]);
            CHECK(!used[b]);
            used[a] = used[b] = 1;
        }
        seen.insert(d);
    });
    CHECK(seen.size() == 105);
}

TEST_CASE("half diagram panels") {
    CHECK(half_diagrams(2, 0).size() == 1);
    CHECK(half_diagrams(4, 2).size() == 6);
    CHECK(half_diagrams(6, 0).size() == 15);
    CHECK(half_diagrams(3, 3).size() == 1);

    for (int n = 0; n <= 7; ++n) {
        for (int l = n % 2; l <= n; l += 2) {
            auto hs = half_diagrams(n, l);
            CHECK(static_cast<long long>(hs.size()) ==
                  binomial(n, l) * double_factorial(n - l - 1));
            std::set<BrauerDiagram> uniq(hs.begin(), hs.end());
            CHECK(uniq.size() == hs.size());
            for (const auto& h : hs) {
                CHECK(h.propagating() == l);
                std::vector<int> tops;
                for (const auto& [a, b] : h.pairs) {
                    CHECK((b <= n || a <= n));  // no arc below
                    if (b > n) tops.push_back(a);
                }
                // propagating lines in order: lower k is reached from the k-th
                // smallest propagating upper point, so none cross
                std::vector<int> sorted_tops = tops;
                std::sort(sorted_tops.begin(), sorted_tops.end());
                std::vector<int> by_bottom(l, 0);
                for (const auto& [a, b] : h.pairs)
                    if (b > n) by_bottom[b - n - 1] = a;
                CHECK(by_bottom == sorted_tops);
            }
        }
    }

    CHECK_THROWS_AS(half_diagrams(3, 0), ParityError);
    CHECK_THROWS_AS(half_diagrams(2, 4), ParityError);
    CHECK_THROWS_AS(half_diagrams(4, -2), ParityError);
}

TEST_CASE("specht module data") {
    SpechtData triv = specht(P("2"));
    CHECK(triv.tabloids.size() == 1);
    CHECK(triv.polytabloids == std::vector<std::vector<long long>>{{1}});

    SpechtData sgn = specht(P("1.1"));
    CHECK(sgn.tabloids == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
    CHECK(sgn.polytabloids == std::vector<std::vector<long long>>{{1, -1}});
    CHECK(specht_gram(sgn)[0][0] == 2);

    SpechtData hook = specht(P("2.1"));
    CHECK(hook.tabloids.size() == 3);
    CHECK(hook.standards.size() == 2);
    // sorted tabloid basis: [0,0,1], [0,1,0], [1,0,0]
    CHECK(hook.polytabloids ==
          std::vector<std::vector<long long>>{{1, 0, -1}, {0, 1, -1}});
    auto hg = specht_gram(hook);
    CHECK(hg[0][0] == 2);
    CHECK(hg[0][1] == 1);
    CHECK(hg[1][1] == 2);
    CHECK(exact_rank(hg) == 2);

    SpechtData empty = specht(P("-"));
    CHECK(empty.tabloids.size() == 1);
    CHECK(empty.polytabloids == std::vector<std::vector<long long>>{{1}});

    for (int m = 0; m <= 6; ++m) {
        for (const Partition& lam : partitions_of(m)) {
            SpechtData sd = specht(lam);
            long long tab = 1;
            for (int k = 1; k <= m; ++k) tab *= k;
            for (int part : lam.parts())
                for (int k = 1; k <= part; ++k) tab /= k;
            CHECK(static_cast<long long>(sd.tabloids.size()) == tab);
            CHECK(static_cast<long long>(sd.standards.size()) ==
                  num_standard_tableaux(lam));
            // the polytabloids stay independent
            std::vector<std::vector<mpz_class>> pm;
            for (const auto& row : sd.polytabloids) {
                pm.push_back({});
                for (long long v : row) pm.back().push_back(mpz_class(static_cast<long>(v)));
            }
            CHECK(exact_rank(pm) == static_cast<int>(sd.standards.size()));
            // adjacent swaps square to the identity on tabloids
            for (int i = 1; i + 1 <= m; ++i) {
                std::vector<int> pi(m);
                std::iota(pi.begin(), pi.end(), 1);
                std::swap(pi[i - 1], pi[i]);
                std::vector<int> tp = tabloid_permutation(sd, pi);
                for (std::size_t t = 0; t < tp.size(); ++t)
                    CHECK(tp[tp[t]] == static_cast<int>(t));
            }
        }
    }

    CHECK(permutation_sign({1, 2, 3}) == 1);
    CHECK(permutation_sign({2, 1, 3}) == -1);
    CHECK(permutation_sign({2, 3, 1}) == 1);
}

TEST_CASE("exact rank") {
    CHECK(exact_rank({}) == 0);
    CHECK(exact_rank({{mpz_class(0), mpz_class(0)}}) == 0);
    CHECK(exact_rank({{mpz_class(1), mpz_class(0)}, {mpz_class(0), mpz_class(1)}}) == 2);
    CHECK(exact_rank({{mpz_class(1), mpz_class(2)}, {mpz_class(2), mpz_class(4)}}) == 1);
    CHECK(exact_rank({{mpz_class(2), mpz_class(1)}, {mpz_class(1), mpz_class(2)}}) == 2);
    // rank is invariant under transposition
    std::vector<std::vector<mpz_class>> a = {
        {mpz_class(3), mpz_class(1), mpz_class(4)},
        {mpz_class(1), mpz_class(5), mpz_class(9)},
        {mpz_class(4), mpz_class(6), mpz_class(13)}};
    std::vector<std::vector<mpz_class>> at(3, std::vector<mpz_class>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) at[j][i] = a[i][j];
    CHECK(exact_rank(a) == 2);
    CHECK(exact_rank(at) == 2);
}

TEST_CASE("certified nullity") {
    SparseMatrix one;
    one.cols = 2;
    one.rows = {{{0, 1}, {1, 1}}};
    CHECK(certified_nullity({one}) == 1);

    SparseMatrix two;
    two.cols = 2;
    two.rows = {{{0, 1}, {1, 1}}, {{0, 1}, {1, -1}}};
    CHECK(certified_nullity({two}) == 0);

    SparseMatrix zero;
    zero.cols = 3;
    CHECK(certified_nullity({zero}) == 3);

    // the kernel vector has a genuine rational slope, so the answer needs a lift
    SparseMatrix ratio;
    ratio.cols = 2;
    ratio.rows = {{{0, 2}, {1, -3}}};
    CHECK(certified_nullity({ratio}) == 1);

    // intersecting constraints one matrix at a time
    SparseMatrix g1, g2;
    g1.cols = g2.cols = 3;
    g1.rows = {{{0, 1}, {1, -1}}};
    g2.rows = {{{1, 1}, {2, -1}}};
    CHECK(certified_nullity({g1, g2}) == 1);
    SparseMatrix g3;
    g3.cols = 3;
    g3.rows = {{{0, 1}, {2, 1}}};
    CHECK(certified_nullity({g1, g2, g3}) == 0);

    CHECK_THROWS_AS(certified_nullity({}), PreconditionViolated);
}

TEST_CASE("cell module bases and action multiplicativity") {
    for (int delta : {0, 2}) {
        for (auto& [n, shape] : std::vector<std::pair<int, Partition>>{
                 {3, P("1")}, {4, P("2")}, {4, P("1.1")}, {4, P("-")}, {5, P("2.1")}}) {
            CellModule cm = cell_module(delta, n, shape);
            CHECK(cm.dim() == dim_cell(n, shape));
            const int dim = static_cast<int>(cm.dim());
            std::vector<BrauerDiagram> gens;
            for (int i = 1; i < n; ++i) {
                gens.push_back(transposition_diagram(n, i));
                gens.push_back(cup_cap_diagram(n, i));
            }
            std::mt19937_64 rng(20240817);
            gens.push_back(random_diagram(n, rng));
            gens.push_back(random_diagram(n, rng));
            for (const auto& g1 : gens) {
                for (const auto& g2 : gens) {
                    Mat m1 = dense_of(cm.action(g1), dim);
                    Mat m2 = dense_of(cm.action(g2), dim);
                    Composite prod = compose(g1, g2);
                    Mat mp = dense_of(cm.action(prod.d), dim);
                    long long scale = ip(delta, prod.loops);
                    for (auto& row : mp)
                        for (auto& v : row) v *= scale;
                    CHECK(matmul(m1, m2) == mp);
                }
            }
        }
    }
}

TEST_CASE("generator relations in the algebra") {
    for (int delta : {-1, 0, 1, 2}) {
        for (int n = 2; n <= 5; ++n) {
            auto one = AlgebraElement{{identity_diagram(n), 1}};
            for (int i = 1; i < n; ++i) {
                AlgebraElement s{{transposition_diagram(n, i), 1}};
                AlgebraElement u{{cup_cap_diagram(n, i), 1}};
                CHECK(multiply(delta, s, s) == one);
                AlgebraElement uu = multiply(delta, u, u);
                AlgebraElement du;
                if (delta != 0) du[cup_cap_diagram(n, i)] = delta;
                CHECK(uu == du);
                CHECK(multiply(delta, s, u) == u);
                CHECK(multiply(delta, u, s) == u);
                if (i + 1 < n) {
                    AlgebraElement s2{{transposition_diagram(n, i + 1), 1}};
                    AlgebraElement u2{{cup_cap_diagram(n, i + 1), 1}};
                    CHECK(multiply(delta, multiply(delta, s, s2), s) ==
                          multiply(delta, multiply(delta, s2, s), s2));
                    CHECK(multiply(delta, multiply(delta, u, u2), u) == u);
                    CHECK(multiply(delta, multiply(delta, u2, u), u2) == u2);
                }
                for (int j = i + 2; j < n; ++j) {
                    AlgebraElement sj{{transposition_diagram(n, j), 1}};
                    CHECK(multiply(delta, s, sj) == multiply(delta, sj, s));
                }
            }
        }
    }
}

TEST_CASE("associativity on sampled triples") {
    std::mt19937_64 rng(987654321);
    for (int n = 2; n <= 6; ++n) {
        for (int rep = 0; rep < 100; ++rep) {
            BrauerDiagram a = random_diagram(n, rng);
            BrauerDiagram b = random_diagram(n, rng);
            BrauerDiagram c = random_diagram(n, rng);
            Composite ab = compose(a, b);
            Composite bc = compose(b, c);
            Composite left = compose(ab.d, c);
            Composite right = compose(a, bc.d);
            CHECK(ab.loops + left.loops == bc.loops + right.loops);
            CHECK(left.d == right.d);
        }
    }
}

TEST_CASE("bilinear form anchors") {
    for (int delta : {0, 2, -1}) {
        auto g = cell_gram(delta, 2, P("-"));
        CHECK(g.size() == 1);
        CHECK(g[0][0] == delta);
    }
    CHECK(cell_gram(0, 2, P("2")) == std::vector<std::vector<mpz_class>>{{mpz_class(1)}});
    CHECK(cell_gram(0, 2, P("1.1")) == std::vector<std::vector<mpz_class>>{{mpz_class(2)}});

    // with no free strands the form restricts to the symmetric group module
    for (int l = 0; l <= 4; ++l)
        for (const Partition& lam : partitions_of(l))
            CHECK(cell_gram(3, l, lam) == specht_gram(specht(lam)));

    for (int delta : {-1, 0, 2}) {
        for (int n = 0; n <= 5; ++n) {
            for (const Partition& lam : cell_labels(n)) {
                auto g = cell_gram(delta, n, lam);
                for (std::size_t i = 0; i < g.size(); ++i)
                    for (std::size_t j = 0; j < i; ++j) CHECK(g[i][j] == g[j][i]);
            }
        }
    }

    CHECK(dim_simple(0, 2, P("-")) == 0);
    CHECK(dim_simple(0, 2, P("1.1")) == 1);
    CHECK(dim_simple(0, 2, P("2")) == 1);
    CHECK(dim_simple(2, 4, P("-")) > 0);
    // far from the critical range every cell module is simple
    for (const Partition& lam : cell_labels(4))
        CHECK(dim_simple(99, 4, lam) == dim_cell(4, lam));

    CHECK_THROWS_AS(cell_module(0, 2, P("1")), ParityError);
    CHECK_THROWS_AS(cell_gram(0, 3, P("2")), ParityError);
}

TEST_CASE("cell dimension identity") {
    DimReport rep = verify_dim_identity(0, 4);
    CHECK(rep.ok);
    std::map<std::string, long long> simples;
    for (const auto& [lab, d] : rep.simples) simples[lab.to_string()] = d;
    CHECK(simples.size() == 7);  // the empty label has no row here
    CHECK(simples["4"] == 1);
    CHECK(simples["3.1"] == 3);
    CHECK(simples["2.2"] == 2);
    CHECK(simples["2.1.1"] == 3);
    CHECK(simples["1.1.1.1"] == 1);
    CHECK(simples["2"] == 3);
    CHECK(simples["1.1"] == 6);
    std::map<std::string, std::pair<long long, long long>> cells;
    for (const auto& [lab, pr] : rep.cells) cells[lab.to_string()] = pr;
    CHECK(cells["-"] == std::pair<long long, long long>{3, 3});
    CHECK(cells["2"] == std::pair<long long, long long>{6, 6});

    for (int delta : {-1, 0, 1, 2, 3})
        for (int n = 0; n <= 4; ++n) CHECK(verify_dim_identity(delta, n).ok);

    std::string j1 = dim_report_json(rep);
    std::string j2 = dim_report_json(verify_dim_identity(0, 4));
    CHECK(j1 == j2);
    CHECK(j1.find("\"ok\": true") != std::string::npos);
    CHECK(j1.find("\"3.1\"") != std::string::npos);
}

TEST_CASE("dimension square sums") {
    for (int n = 0; n <= 8; ++n) {
        long long sum = 0;
        for (const Partition& lam : cell_labels(n)) {
            long long d = dim_cell(n, lam);
            sum += d * d;
        }
        CHECK(sum == double_factorial(2 * n - 1));
    }
    long long visits = 0;
    enumerate_diagrams(5, [&](const BrauerDiagram&) { ++visits; });
    long long sum5 = 0;
    for (const Partition& lam : cell_labels(5)) sum5 += dim_cell(5, lam) * dim_cell(5, lam);
    CHECK(visits == sum5);
}

TEST_CASE("hom spaces certified") {
    CHECK(hom_dim(0, 0, P("-"), P("-")) == 1);
    CHECK(hom_dim(2, 1, P("1"), P("1")) == 1);

    CHECK(hom_dim(0, 2, P("2"), P("-")) == 1);
    CHECK(hom_dim(0, 2, P("-"), P("2")) == 1);
    CHECK(hom_dim(0, 2, P("1.1"), P("-")) == 0);

    // away from the degenerate parameter the blocks are singletons
    CHECK(hom_dim(2, 2, P("2"), P("1.1")) == 0);
    CHECK(hom_dim(2, 2, P("2"), P("-")) == 0);
    CHECK(hom_dim(2, 2, P("2"), P("2")) == 1);

    CHECK(hom_dim(0, 4, P("2"), P("-")) == 1);
    CHECK(hom_dim(0, 4, P("3.1"), P("2")) == 1);
    CHECK(hom_dim(1, 4, P("2.2"), P("-")) >= 1);

    CHECK_THROWS_AS(hom_dim(0, 3, P("2"), P("-")), ParityError);
}
