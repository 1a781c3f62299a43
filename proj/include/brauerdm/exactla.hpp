#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace brauerdm {

// rank over the rationals, by fraction-free integer elimination
int exact_rank(std::vector<std::vector<mpz_class>> m);

// sparse integer matrix given by rows of (column, value) entries
struct SparseMatrix {
    int cols = 0;
    std::vector<std::vector<std::pair<int, long long>>> rows;
};

// dimension over the rationals of the common right kernel of the given
// matrices, which must agree on cols; computed modulo a large prime, then
// every kernel basis vector is lifted back to rationals and re-checked in
// exact arithmetic, so the result is certified rather than probabilistic
int certified_nullity(const std::vector<SparseMatrix>& constraints);

}  // namespace brauerdm
