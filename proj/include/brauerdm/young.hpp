#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "brauerdm/errors.hpp"

namespace brauerdm {

// Box of a Young diagram, 1-based: row 1 is the top row, col 1 the left column.
struct Box {
    int row = 0;
    int col = 0;
    int content() const { return col - row; }
    friend auto operator<=>(const Box&, const Box&) = default;
};

// chg(b) = delta - 1 - 2*content(b).
inline int charge(int delta, const Box& b) { return delta - 1 - 2 * b.content(); }

// Integer partition: weakly decreasing positive parts.  The empty partition
// prints as "-", otherwise parts are dot-joined, e.g. "7.7.6.5.3.2".
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition parse(const std::string& text);
    std::string to_string() const;

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int sum() const;
    bool empty() const { return parts_.empty(); }
    // part(i) is 1-based and 0 beyond the last row
    int part(int i) const;

    Partition conjugate() const;
    bool contains(const Partition& inner) const;
    std::vector<Box> boxes() const;
    std::vector<Box> removable_boxes() const;
    std::vector<Box> addable_boxes() const;
    // partition with part(row) reduced by one; requires the result to be valid
    Partition remove_from_row(int row) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    // degree descending, then lexicographically descending on parts
    bool before(const Partition& other) const;

  private:
    std::vector<int> parts_;
};

struct PartitionHash {
    size_t operator()(const Partition& p) const;
};

// boxes of outer/inner, row-major; throws NotContained
std::vector<Box> skew_boxes(const Partition& outer, const Partition& inner);

// true iff the boxes form a connected chain under edge-adjacency with no
// branching and no 2x2 square, i.e. their dual graph is a simple path
bool is_rim(std::span<const Box> boxes);

// labels of the cell modules of B_n: partitions of n, n-2, ..., in
// enumeration order (degree descending, then lexicographically descending)
std::vector<Partition> cell_labels(int n);

// partitions of exactly m, lexicographically descending
std::vector<Partition> partitions_of(int m);

// number of standard tableaux, by the hook length formula
long long num_standard_tableaux(const Partition& lam);

// dim of the cell module of B_n labelled by lam ⊢ l:
//   C(n,l) * (n-l-1)!! * f^lam, with (-1)!! = 1
long long dim_cell(int n, const Partition& lam);

long long binomial(int n, int k);
long long double_factorial(int m);  // m!! with (-1)!! = 0!! = 1

}  // namespace brauerdm
