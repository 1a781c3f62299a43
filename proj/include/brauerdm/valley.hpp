#pragma once

#include <optional>
#include <vector>

#include "brauerdm/evengraph.hpp"
#include "brauerdm/rankset.hpp"
#include "brauerdm/young.hpp"

namespace brauerdm {

// Truncation of the shifted weight sequence lam + rho attached to (delta, lam),
// where rho_i = -delta/2 - (i-1).  Entries are half-integers stored doubled:
//   doubled[i-1] = 2*lam_i - delta - 2*(i-1),  i = 1..prefix.
// The sequence is strictly decreasing; beyond length(lam) it follows the tail
// rule doubled = -delta - 2*(i-1).  All entries share the parity of delta.
struct WeightSeq {
    int delta = 0;
    int lam_len = 0;
    std::vector<long long> doubled;

    int prefix() const { return static_cast<int>(doubled.size()); }
    // rendering with halves, e.g. "(7/2, 3/2, -1/2, ...)" for odd delta
    std::string to_string(int max_terms = 12) const;
};

// default truncation length: length(lam) + lam_1 + |delta| + 4, or the value
// of BRAUERDM_PREFIX_LEN when that environment variable is set
int default_prefix(int delta, const Partition& lam);

// prefix = 0 selects the default; explicit values must cover the whole of lam
WeightSeq weight_seq(int delta, const Partition& lam, int prefix = 0);

// index pairs {i < j} with doubled[j] = -doubled[i] != 0, 1-based
std::vector<std::pair<int, int>> singular_pairs(const WeightSeq& seq);
int singularity_degree(int delta, const Partition& lam);

// entries surviving after both members of every singular pair are removed
struct RegEntry {
    long long doubled = 0;
    int index = 0;  // 1-based position in the original sequence
};
std::vector<RegEntry> regularize(const WeightSeq& seq);

// ranks (1-based, by increasing magnitude over the regularized entries) at
// which the regularized sequence is strictly positive, adjusted to even order
// by toggling rank 1.  A zero entry always has rank 1, so the result does not
// depend on which sign the zero is given; see rank_set_zero_convention.
RankSet rank_set(int delta, const Partition& lam, int prefix = 0);

// variant forcing the sign convention of a zero entry (counts it as positive
// or negative before the final parity adjustment); used to check that the
// convention does not matter
RankSet rank_set_zero_convention(int delta, const Partition& lam, bool zero_positive,
                                 int prefix = 0);

// the partition in the block of `anchor` whose rank set is b; throws
// NotInImage when no such partition exists.  The sequence of the result is a
// signed rearrangement of the anchor's: singular pairs are kept, regular
// magnitudes are re-signed so that exactly the ranks in b (or its rank-1
// toggle, whichever yields a partition in the block) are positive.
Partition rank_set_inverse(int delta, const Partition& anchor, const RankSet& b, int prefix = 0);

// same orbit test: aligned truncations have equal magnitude multisets, and
// equal positive-entry count parity unless a zero entry is present
bool same_block(int delta, const Partition& lam, const Partition& mu);

// mu < lam is a cover in the block order: proper containment, same block, and
// the rank sets form an edge of the even-set graph with rank_set(lam) upper
bool is_minimal_balanced(int delta, const Partition& lam, const Partition& mu);

// Certificate that lam/mu is a pair of opposite rims: a half-integer center
// p with 2*(p_col - p_row) = delta - 1 whose half-turn maps the skew to
// itself with no fixed box and no fixed row, splitting it as rim + image.
struct BalancedWitness {
    int center_row2 = 0;  // doubled center coordinates
    int center_col2 = 0;
    std::vector<Box> rim;        // one rim of the pair
    std::vector<Box> rim_image;  // its half-turn image
};

// definition-faithful search for a witness; nullopt when none exists
std::optional<BalancedWitness> minimal_balanced_witness(int delta, const Partition& lam,
                                                        const Partition& mu);

// oracle twin of is_minimal_balanced, decided by witness search alone
bool is_minimal_balanced_geometric(int delta, const Partition& lam, const Partition& mu);

// partitions covered by lam in the block order, in enumeration order
std::vector<Partition> block_down_neighbors(int delta, const Partition& lam);

// members of the block of lam among the cell labels of B_n, enumeration order
std::vector<Partition> block_members(int delta, const Partition& lam, int n);

// partitions whose rank sets lie within the given edge distance of
// rank_set(lam) in the even-set graph, with their distances
std::vector<std::pair<Partition, int>> block_ball(int delta, const Partition& lam, int radius);

// carry mu from the block of lam to the block of lam minus one box in `row`;
// requires equal singularity degree on both sides (else SingularityMismatch)
Partition transport_block(int delta, const Partition& lam, int row, const Partition& mu);

}  // namespace brauerdm
