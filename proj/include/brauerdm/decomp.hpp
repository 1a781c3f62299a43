#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "brauerdm/rankset.hpp"
#include "brauerdm/young.hpp"

namespace brauerdm {

struct PartitionBefore {
    bool operator()(const Partition& a, const Partition& b) const { return a.before(b); }
};

// labels can be read combinatorially ("primed", the internal canonical
// form) or conjugated throughout to name the modules themselves
enum class Convention { primed, module_ };

Convention convention_from_string(const std::string& s);
std::string convention_name(Convention c);

// one matrix row in the primed labelling: support labels with their cube
// depths; the owner sits at depth 0
struct DecompRow {
    Partition owner;
    std::map<Partition, int, PartitionBefore> support;
};

DecompRow decomp_row(int delta, const Partition& lam);

struct DecompMatrix {
    int delta = 0;
    int n = 0;
    Convention convention = Convention::primed;
    std::vector<Partition> row_labels;
    std::vector<Partition> col_labels;  // row_labels plus the dropped empty label, if any
    std::vector<std::vector<int>> depth;  // depth[r][c] >= 0, or -1 for an absent entry
    bool present(size_t r, size_t c) const { return depth[r][c] >= 0; }
};

// rows and columns over the cell labels of B_n; at delta = 0 with n >= 2
// the empty label keeps its column but has no row
DecompMatrix decomp_matrix(int delta, int n, Convention convention);

struct CartanMatrix {
    int delta = 0;
    int n = 0;
    Convention convention = Convention::primed;
    std::vector<Partition> labels;
    std::vector<std::vector<long long>> entry;
};

CartanMatrix cartan(int delta, int n, Convention convention);

struct BlockInfo {
    Partition rep;  // first member in enumeration order
    std::vector<Partition> members;
    int singularity = 0;
    std::vector<std::pair<Partition, RankSet>> valley;  // member with its set
};

struct BlockReport {
    int delta = 0;
    int n = 0;
    std::vector<BlockInfo> blocks;
};

BlockReport block_report(int delta, int n);

// format is one of "json", "csv", "latex", "polytable"; csv renders 0/1,
// or cube depths (blank for absent) when depths is set; polytable renders
// the depth grid with the rows and columns named by their rank sets
std::string export_matrix(const DecompMatrix& m, const std::string& format, bool depths = false);

// exponent grid of the polynomial table over the given sets, blank = zero
std::string polytable_text(const std::vector<RankSet>& sets);

}  // namespace brauerdm
