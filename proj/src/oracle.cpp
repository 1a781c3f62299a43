#include "brauerdm/oracle.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>

#include "brauerdm/decomp.hpp"
#include "brauerdm/errors.hpp"
#include "brauerdm/exactla.hpp"

namespace brauerdm {

long long CellModule::dim() const {
    return static_cast<long long>(halves.size()) *
           static_cast<long long>(sp.standards.size());
}

namespace {

long long ipow_ll(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

mpz_class mpz_pow_ll(long long base, int exp) {
    mpz_class r = 1;
    for (int i = 0; i < exp; ++i) r *= static_cast<long>(base);
    return r;
}

// a composite with full propagation splits as a non-crossing half stacked
// over a permutation: lower point k of the half continues to lower point
// sigma[k-1] of the composite
struct Split {
    std::vector<std::pair<int, int>> half_pairs;
    std::vector<int> sigma;
};

Split split_composite(const BrauerDiagram& d, int l) {
    Split s;
    std::vector<std::pair<int, int>> prop;
    for (const auto& pr : d.pairs) {
        if (pr.second <= d.n_top) {
            s.half_pairs.push_back(pr);
        } else if (pr.first > d.n_top) {
            throw InternalError("lower arc in a full-propagation composite");
        } else {
            prop.push_back({pr.first, pr.second - d.n_top});
        }
    }
    std::sort(prop.begin(), prop.end());
    if (static_cast<int>(prop.size()) != l)
        throw InternalError("propagating count changed during the split");
    s.sigma.resize(l);
    for (int k = 0; k < l; ++k) {
        s.half_pairs.push_back({prop[k].first, d.n_top + k + 1});
        s.sigma[k] = prop[k].second;
    }
    std::sort(s.half_pairs.begin(), s.half_pairs.end());
    return s;
}

// letters are relabelled by the inverse of the residual permutation, which
// makes the action multiplicative over stacking
std::vector<int> residual_relabelling(const std::vector<int>& sigma) {
    std::vector<int> tau(sigma.size());
    for (std::size_t k = 0; k < sigma.size(); ++k) tau[sigma[k] - 1] = static_cast<int>(k) + 1;
    return tau;
}

std::vector<long long> expand_coords(const CellModule& cm, const std::vector<long long>& w) {
    const int f = static_cast<int>(cm.sp.standards.size());
    const int T = static_cast<int>(cm.sp.tabloids.size());
    std::vector<mpq_class> c(f, 0);
    for (int a = 0; a < f; ++a)
        for (int b = 0; b < f; ++b)
            c[a] += cm.expand[a][b] *
                    mpq_class(static_cast<long>(w[cm.pivot_tabloids[b]]));
    for (int j = 0; j < T; ++j) {
        mpq_class acc = 0;
        for (int a = 0; a < f; ++a)
            acc += c[a] * mpq_class(static_cast<long>(cm.sp.polytabloids[a][j]));
        if (acc != mpq_class(static_cast<long>(w[j])))
            throw InternalError("vector left the span of the polytabloids");
    }
    std::vector<long long> out(f);
    for (int a = 0; a < f; ++a) {
        if (c[a].get_den() != 1)
            throw InternalError("polytabloid coefficient is not an integer");
        mpz_class num = c[a].get_num();
        if (abs(num) > mpz_class(1) << 40)
            throw InternalError("polytabloid coefficient out of range");
        out[a] = num.get_si();
    }
    return out;
}

}  // namespace

std::vector<std::vector<std::pair<int, long long>>> CellModule::action(
    const BrauerDiagram& g) const {
    if (g.n_top != n || g.n_bot != n)
        throw PreconditionViolated("acting diagram size mismatch");
    const int l = sp.size;
    const int f = static_cast<int>(sp.standards.size());
    const int T = static_cast<int>(sp.tabloids.size());
    std::vector<std::vector<std::pair<int, long long>>> cols(dim());
    for (std::size_t h = 0; h < halves.size(); ++h) {
        Composite comp = compose(g, halves[h]);
        if (comp.d.propagating() < l) continue;
        long long unit = ipow_ll(delta, comp.loops);
        if (unit == 0) continue;
        Split spl = split_composite(comp.d, l);
        BrauerDiagram y{n, l, spl.half_pairs};
        auto it = half_index.find(y);
        if (it == half_index.end())
            throw InternalError("split factor is not a listed half diagram");
        std::vector<std::pair<int, int>> pp;
        for (int k = 0; k < l; ++k) pp.push_back({k + 1, l + spl.sigma[k]});
        std::sort(pp.begin(), pp.end());
        Composite back = compose(y, BrauerDiagram{l, l, pp});
        if (back.loops != 0 || !(back.d == comp.d))
            throw InternalError("composite failed to refactor");
        std::vector<int> tperm = tabloid_permutation(sp, residual_relabelling(spl.sigma));
        for (int t = 0; t < f; ++t) {
            std::vector<long long> w(T, 0);
            for (int i = 0; i < T; ++i) w[tperm[i]] += sp.polytabloids[t][i];
            std::vector<long long> c = expand_coords(*this, w);
            auto& col = cols[h * f + t];
            for (int a = 0; a < f; ++a) {
                if (c[a] == 0) continue;
                col.push_back({it->second * f + a, unit * c[a]});
            }
        }
    }
    return cols;
}

CellModule cell_module(int delta, int n, const Partition& shape) {
    const int l = shape.sum();
    if (n < 0 || l > n || (n - l) % 2 != 0)
        throw ParityError("shape degree must match the strand count in parity and size");
    CellModule cm;
    cm.delta = delta;
    cm.n = n;
    cm.shape = shape;
    cm.halves = half_diagrams(n, l);
    for (std::size_t i = 0; i < cm.halves.size(); ++i)
        cm.half_index[cm.halves[i]] = static_cast<int>(i);
    cm.sp = specht(shape);
    if (cm.dim() != dim_cell(n, shape))
        throw InternalError("basis count disagrees with the dimension formula");

    const int f = static_cast<int>(cm.sp.standards.size());
    const int T = static_cast<int>(cm.sp.tabloids.size());
    // pivot tabloid coordinates of the polytabloid matrix
    std::vector<std::vector<mpq_class>> m(f, std::vector<mpq_class>(T, 0));
    for (int a = 0; a < f; ++a)
        for (int j = 0; j < T; ++j)
            m[a][j] = static_cast<long>(cm.sp.polytabloids[a][j]);
    int r = 0;
    for (int j = 0; j < T && r < f; ++j) {
        int piv = -1;
        for (int i = r; i < f; ++i)
            if (m[i][j] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        mpq_class inv = m[r][j];
        for (int k = j; k < T; ++k) m[r][k] /= inv;
        for (int i = 0; i < f; ++i) {
            if (i == r || m[i][j] == 0) continue;
            mpq_class fac = m[i][j];
            for (int k = j; k < T; ++k) m[i][k] -= fac * m[r][k];
        }
        cm.pivot_tabloids.push_back(j);
        ++r;
    }
    if (r != f) throw InternalError("polytabloids are not independent");

    // invert the pivot minor: row b of the minor holds the polytabloid values
    // at the b-th pivot tabloid
    std::vector<std::vector<mpq_class>> aug(f, std::vector<mpq_class>(2 * f, 0));
    for (int b = 0; b < f; ++b) {
        for (int a = 0; a < f; ++a)
            aug[b][a] = static_cast<long>(cm.sp.polytabloids[a][cm.pivot_tabloids[b]]);
        aug[b][f + b] = 1;
    }
    for (int c = 0; c < f; ++c) {
        int piv = -1;
        for (int i = c; i < f; ++i)
            if (aug[i][c] != 0) { piv = i; break; }
        if (piv < 0) throw InternalError("pivot minor is singular");
        std::swap(aug[c], aug[piv]);
        mpq_class inv = aug[c][c];
        for (int k = 0; k < 2 * f; ++k) aug[c][k] /= inv;
        for (int i = 0; i < f; ++i) {
            if (i == c || aug[i][c] == 0) continue;
            mpq_class fac = aug[i][c];
            for (int k = 0; k < 2 * f; ++k) aug[i][k] -= fac * aug[c][k];
        }
    }
    cm.expand.assign(f, std::vector<mpq_class>(f, 0));
    for (int a = 0; a < f; ++a)
        for (int b = 0; b < f; ++b) cm.expand[a][b] = aug[a][f + b];
    return cm;
}

std::vector<std::vector<mpz_class>> cell_gram(int delta, int n, const Partition& shape) {
    CellModule cm = cell_module(delta, n, shape);
    const int l = cm.sp.size;
    const int f = static_cast<int>(cm.sp.standards.size());
    const int T = static_cast<int>(cm.sp.tabloids.size());
    const std::size_t dim = static_cast<std::size_t>(cm.dim());
    std::vector<std::vector<mpz_class>> g(dim, std::vector<mpz_class>(dim, 0));
    for (std::size_t h = 0; h < cm.halves.size(); ++h) {
        BrauerDiagram mirrored = flip(cm.halves[h]);
        for (std::size_t k = 0; k < cm.halves.size(); ++k) {
            Composite comp = compose(mirrored, cm.halves[k]);
            if (comp.d.propagating() < l) continue;
            Split spl = split_composite(comp.d, l);
            std::vector<int> tperm =
                tabloid_permutation(cm.sp, residual_relabelling(spl.sigma));
            mpz_class unit = mpz_pow_ll(delta, comp.loops);
            for (int t = 0; t < f; ++t) {
                std::vector<long long> w(T, 0);
                for (int i = 0; i < T; ++i) w[tperm[i]] += cm.sp.polytabloids[t][i];
                for (int s = 0; s < f; ++s) {
                    long long dot = 0;
                    for (int i = 0; i < T; ++i) dot += cm.sp.polytabloids[s][i] * w[i];
                    if (dot != 0)
                        g[h * f + s][k * f + t] = unit * static_cast<long>(dot);
                }
            }
        }
    }
    return g;
}

long long dim_simple(int delta, int n, const Partition& shape) {
    return exact_rank(cell_gram(delta, n, shape));
}

DimReport verify_dim_identity(int delta, int n) {
    DecompMatrix dm = decomp_matrix(delta, n, Convention::module_);
    DimReport rep;
    rep.delta = delta;
    rep.n = n;
    std::vector<long long> sdim(dm.row_labels.size(), 0);
    for (std::size_t i = 0; i < dm.row_labels.size(); ++i) {
        sdim[i] = dim_simple(delta, n, dm.row_labels[i]);
        rep.simples.push_back({dm.row_labels[i], sdim[i]});
    }
    for (std::size_t j = 0; j < dm.col_labels.size(); ++j) {
        long long expect = dim_cell(n, dm.col_labels[j]);
        long long got = 0;
        for (std::size_t i = 0; i < dm.row_labels.size(); ++i)
            if (dm.present(i, j)) got += sdim[i];
        rep.cells.push_back({dm.col_labels[j], {expect, got}});
        if (expect != got)
            throw IdentityViolation("cell dimension identity fails at " +
                                    dm.col_labels[j].to_string());
    }
    rep.ok = true;
    return rep;
}

std::string dim_report_json(const DimReport& rep) {
    nlohmann::ordered_json j;
    j["delta"] = rep.delta;
    j["n"] = rep.n;
    j["ok"] = rep.ok;
    j["simples"] = nlohmann::ordered_json::array();
    for (const auto& [lab, d] : rep.simples)
        j["simples"].push_back({{"label", lab.to_string()}, {"dim", d}});
    j["cells"] = nlohmann::ordered_json::array();
    for (const auto& [lab, pair] : rep.cells)
        j["cells"].push_back(
            {{"label", lab.to_string()}, {"dim", pair.first}, {"sum", pair.second}});
    return j.dump(2) + "\n";
}

long long hom_dim(int delta, int n, const Partition& lam, const Partition& mu) {
    CellModule src = cell_module(delta, n, lam);
    CellModule dst = cell_module(delta, n, mu);
    const int da = static_cast<int>(src.dim());
    const int db = static_cast<int>(dst.dim());
    // with no generators every linear map is a module map
    if (n < 2) return static_cast<long long>(da) * db;

    std::vector<SparseMatrix> constraints;
    for (int i = 1; i <= n - 1; ++i) {
        for (int kind = 0; kind < 2; ++kind) {
            BrauerDiagram g =
                kind == 0 ? transposition_diagram(n, i) : cup_cap_diagram(n, i);
            auto ca = src.action(g);
            auto cb = dst.action(g);
            std::vector<std::vector<std::pair<int, long long>>> rb(db);
            for (int jcol = 0; jcol < db; ++jcol)
                for (const auto& [row, v] : cb[jcol]) rb[row].push_back({jcol, v});
            // unknown matrix M (db x da), entry (k, c) at index k*da + c;
            // the constraint is act_dst(g) M = M act_src(g)
            SparseMatrix sm;
            sm.cols = da * db;
            for (int r = 0; r < db; ++r) {
                for (int c = 0; c < da; ++c) {
                    std::map<int, long long> row;
                    for (const auto& [k, v] : rb[r]) row[k * da + c] += v;
                    for (const auto& [k, v] : ca[c]) row[r * da + k] -= v;
                    std::vector<std::pair<int, long long>> rr;
                    for (const auto& [idx, v] : row)
                        if (v != 0) rr.push_back({idx, v});
                    if (!rr.empty()) sm.rows.push_back(std::move(rr));
                }
            }
            constraints.push_back(std::move(sm));
        }
    }
    return certified_nullity(constraints);
}

}  // namespace brauerdm
