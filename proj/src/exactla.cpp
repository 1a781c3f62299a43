#include "brauerdm/exactla.hpp"

#include <cstdint>

#include "brauerdm/errors.hpp"

namespace brauerdm {

int exact_rank(std::vector<std::vector<mpz_class>> m) {
    if (m.empty() || m[0].empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    mpz_class prev = 1;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                mpz_class t = m[i][j] * m[r][c] - m[i][c] * m[r][j];
                // one-step fraction-free elimination: the division is exact
                if (t % prev != 0) throw InternalError("inexact division in elimination");
                m[i][j] = t / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

namespace {

constexpr std::uint64_t kPrimes[2] = {2305843009213693951ull, 9223372036854775783ull};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

std::uint64_t reduce_ll(long long v, std::uint64_t p) {
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    return static_cast<std::uint64_t>(m);
}

// reduced row echelon form in place; returns the pivot columns
std::vector<int> rref_mod_p(std::vector<std::vector<std::uint64_t>>& m, int cols, std::uint64_t p) {
    const int rows = static_cast<int>(m.size());
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        std::uint64_t inv = invmod(m[r][c], p);
        for (int j = c; j < cols; ++j) m[r][j] = mulmod(m[r][j], inv, p);
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            std::uint64_t f = m[i][c];
            for (int j = c; j < cols; ++j) {
                std::uint64_t t = m[i][j] + p - mulmod(f, m[r][j], p);
                if (t >= p) t -= p;
                m[i][j] = t;
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// basis of the right kernel of m, as vectors of length cols
std::vector<std::vector<std::uint64_t>> kernel_mod_p(std::vector<std::vector<std::uint64_t>> m,
                                                     int cols, std::uint64_t p) {
    std::vector<int> pivots = rref_mod_p(m, cols, p);
    std::vector<char> is_piv(cols, 0);
    for (int c : pivots) is_piv[c] = 1;
    std::vector<std::vector<std::uint64_t>> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_piv[c]) continue;
        std::vector<std::uint64_t> x(cols, 0);
        x[c] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            x[pivots[i]] = (p - m[i][c]) % p;
        basis.push_back(std::move(x));
    }
    return basis;
}

// lattice step of the extended euclidean algorithm: recovers n/d with
// |n|, d bounded by sqrt(p/2) when such a representative of a exists
bool rat_reconstruct(std::uint64_t a, std::uint64_t p, mpz_class& num, mpz_class& den) {
    mpz_class bound;
    mpz_class half = (mpz_class(static_cast<unsigned long>(p)) - 1) / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpz_class r0 = static_cast<unsigned long>(p), r1 = static_cast<unsigned long>(a);
    mpz_class t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound) return false;
    num = r1;
    den = t1;
    if (den < 0) { num = -num; den = -den; }
    return true;
}

}  // namespace

int certified_nullity(const std::vector<SparseMatrix>& constraints) {
    if (constraints.empty()) throw PreconditionViolated("no constraint matrices given");
    const int cols = constraints[0].cols;
    for (const auto& sm : constraints)
        if (sm.cols != cols) throw PreconditionViolated("constraint column counts differ");
    if (cols == 0) return 0;

    for (std::uint64_t p : kPrimes) {
        // kernel of the first nonempty constraint, then intersect one at a time
        std::vector<std::vector<std::uint64_t>> basis;
        bool have_basis = false;
        for (const auto& sm : constraints) {
            if (sm.rows.empty()) continue;
            if (!have_basis) {
                std::vector<std::vector<std::uint64_t>> dense(
                    sm.rows.size(), std::vector<std::uint64_t>(cols, 0));
                for (std::size_t i = 0; i < sm.rows.size(); ++i)
                    for (const auto& [c, v] : sm.rows[i])
                        dense[i][c] = (dense[i][c] + reduce_ll(v, p)) % p;
                basis = kernel_mod_p(std::move(dense), cols, p);
                have_basis = true;
            } else {
                if (basis.empty()) break;
                const int k = static_cast<int>(basis.size());
                std::vector<std::vector<std::uint64_t>> prod(
                    sm.rows.size(), std::vector<std::uint64_t>(k, 0));
                for (std::size_t i = 0; i < sm.rows.size(); ++i)
                    for (const auto& [c, v] : sm.rows[i]) {
                        std::uint64_t vv = reduce_ll(v, p);
                        if (vv == 0) continue;
                        for (int j = 0; j < k; ++j) {
                            std::uint64_t t = prod[i][j] + mulmod(vv, basis[j][c], p);
                            if (t >= p) t -= p;
                            prod[i][j] = t;
                        }
                    }
                std::vector<std::vector<std::uint64_t>> coeff = kernel_mod_p(std::move(prod), k, p);
                std::vector<std::vector<std::uint64_t>> next;
                next.reserve(coeff.size());
                for (const auto& y : coeff) {
                    std::vector<std::uint64_t> x(cols, 0);
                    for (int j = 0; j < k; ++j) {
                        if (y[j] == 0) continue;
                        for (int c = 0; c < cols; ++c) {
                            std::uint64_t t = x[c] + mulmod(y[j], basis[j][c], p);
                            if (t >= p) t -= p;
                            x[c] = t;
                        }
                    }
                    next.push_back(std::move(x));
                }
                basis = std::move(next);
            }
        }
        if (!have_basis) return cols;
        if (basis.empty()) return 0;

        // modular nullity is an upper bound for the rational one; lifting a
        // full independent set of exact kernel vectors makes it a lower bound
        const std::size_t d = basis.size();
        std::vector<int> pivots = rref_mod_p(basis, cols, p);
        if (pivots.size() != d) throw InternalError("kernel basis lost rank");

        bool lifted_all = true;
        for (std::size_t i = 0; i < d && lifted_all; ++i) {
            std::vector<mpz_class> nums(cols), dens(cols);
            mpz_class lcm = 1;
            for (int c = 0; c < cols; ++c) {
                if (basis[i][c] == 0) { nums[c] = 0; dens[c] = 1; continue; }
                if (!rat_reconstruct(basis[i][c], p, nums[c], dens[c])) {
                    lifted_all = false;
                    break;
                }
                mpz_class g;
                mpz_lcm(g.get_mpz_t(), lcm.get_mpz_t(), dens[c].get_mpz_t());
                lcm = g;
            }
            if (!lifted_all) break;
            std::vector<mpz_class> x(cols);
            for (int c = 0; c < cols; ++c) x[c] = nums[c] * (lcm / dens[c]);
            for (const auto& sm : constraints) {
                for (const auto& row : sm.rows) {
                    mpz_class acc = 0;
                    for (const auto& [c, v] : row)
                        acc += mpz_class(static_cast<long>(v)) * x[c];
                    if (acc != 0) { lifted_all = false; break; }
                }
                if (!lifted_all) break;
            }
        }
        if (lifted_all) return static_cast<int>(d);
    }
    throw InternalError("kernel could not be certified at any modulus");
}

}  // namespace brauerdm
