#pragma once

#include <vector>

#include "brauerdm/young.hpp"

namespace brauerdm {

// symmetric-group module data for a shape on |shape| letters (degree);
// a tabloid is the vector giving each letter's row (0-based), and the list
// of tabloids is sorted so indices are stable; polytabloids are integer
// vectors over the tabloid basis, one per standard filling, and they are
// linearly independent, so their count is the number of standard fillings
struct SpechtData {
    Partition shape;
    int size = 0;
    std::vector<std::vector<int>> tabloids;
    std::vector<std::vector<std::vector<int>>> standards;
    std::vector<std::vector<long long>> polytabloids;

    int tabloid_index(const std::vector<int>& row_of) const;
};

SpechtData specht(const Partition& shape);

// relabelling letter e to pi[e-1] permutes tabloids; out[i] is the index
// of the image of tabloid i
std::vector<int> tabloid_permutation(const SpechtData& sd, const std::vector<int>& pi);

// sign of a permutation given by 1-based images
int permutation_sign(const std::vector<int>& pi);

}  // namespace brauerdm
