#pragma once

#include <map>

#include "brauerdm/evengraph.hpp"
#include "brauerdm/rankset.hpp"

namespace brauerdm {

// row of the polynomial table indexed by the owner set; every entry is a
// plain power of v recorded by its exponent, with entries[owner] = v^0
struct PolyRow {
    RankSet owner;
    std::map<RankSet, int> entries;
    friend bool operator==(const PolyRow&, const PolyRow&) = default;
};

// extend the finished row at edge.lower to the row at edge.upper; throws
// InternalError if any resulting entry fails to be a plain power of v, has
// a negative exponent, or puts a constant off the diagonal
PolyRow kl_row_step(const PolyRow& below, const EvenEdge& edge);

// memoized rows, computed from the empty set upward along one chosen
// incoming edge each; the result is independent of that choice
class KlTable {
public:
    const PolyRow& row(const RankSet& a);

private:
    std::map<RankSet, PolyRow> memo_;
};

PolyRow kl_row(const RankSet& a);

// true iff the row's entries are exactly the cube vertex depths
bool kl_equals_cube(const RankSet& a);

}  // namespace brauerdm
