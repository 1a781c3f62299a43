#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "brauerdm/brauer.hpp"
#include "brauerdm/specht.hpp"
#include "brauerdm/young.hpp"

namespace brauerdm {

// cell module of the diagram algebra on n strands at integer parameter delta,
// attached to a shape of degree l <= n with n - l even: the basis is indexed
// by (half diagram, standard filling) pairs as h * f + t, where f counts the
// standard fillings; the total dimension matches dim_cell(n, shape)
struct CellModule {
    int delta = 0;
    int n = 0;
    Partition shape;
    std::vector<BrauerDiagram> halves;
    std::map<BrauerDiagram, int> half_index;
    SpechtData sp;
    // re-expression of a vector in the span of the polytabloids: coordinates
    // are expand times the vector's restriction to the pivot tabloids
    std::vector<int> pivot_tabloids;
    std::vector<std::vector<mpq_class>> expand;

    long long dim() const;

    // sparse columns of the action of an (n,n) diagram; column h*f+t lists
    // (basis index, integer coefficient) pairs
    std::vector<std::vector<std::pair<int, long long>>> action(const BrauerDiagram& g) const;
};

CellModule cell_module(int delta, int n, const Partition& shape);

// matrix of the invariant bilinear pairing on the cell module: the pairing of
// (x, s) and (y, t) is delta^c times the pairing of s with the permuted t,
// where stacking the mirror of x over y leaves c loops and a permutation,
// and it is 0 when propagating lines are lost
std::vector<std::vector<mpz_class>> cell_gram(int delta, int n, const Partition& shape);

// dimension of the simple head of the cell module: the exact rank of the form
long long dim_simple(int delta, int n, const Partition& shape);

// every cell dimension must equal the sum, over the rows of the decomposition
// matrix in the module convention, of the row's entry at that label times the
// row label's simple dimension
struct DimReport {
    int delta = 0;
    int n = 0;
    bool ok = false;
    std::vector<std::pair<Partition, long long>> simples;            // row label, simple dim
    std::vector<std::pair<Partition, std::pair<long long, long long>>> cells;  // label, (dim, sum)
};

// throws IdentityViolation naming the first failing label
DimReport verify_dim_identity(int delta, int n);

std::string dim_report_json(const DimReport& rep);

// dimension of the space of module maps from the cell module of lam to the
// cell module of mu, solved as the common kernel of the generator constraints
// and certified in exact arithmetic
long long hom_dim(int delta, int n, const Partition& lam, const Partition& mu);

}  // namespace brauerdm
