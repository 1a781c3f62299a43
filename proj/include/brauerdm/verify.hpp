#pragma once

#include <string>
#include <vector>

namespace brauerdm {

// one named check of the verification battery
struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail;  // deterministic counts, or the first failing site
};

bool all_ok(const std::vector<CheckResult>& results);

// frozen worked values: valley maps, regularized sequences, small cubes with
// their partition labellings
std::vector<CheckResult> verify_examples();

// polynomial rows equal cube depths on every even-order subset of {1..top},
// re-derived along every incoming edge
std::vector<CheckResult> verify_kl(int top);

// the partition of the label set by same_block equals the closure of the
// cover relation, for delta in [-2,4] and every label set up to max_n
std::vector<CheckResult> verify_blocks(int max_n);

// graph-theoretic cover test against the witness-search oracle on all proper
// containment pairs inside the label set of size max_m, delta in [-2,4]
std::vector<CheckResult> verify_mibs(int max_m);

// cell dimension identity for delta in {-1..3}, n <= max_n, plus the square
// sum over each label set against the double factorial
std::vector<CheckResult> verify_dims(int max_n);

// delta = 0, n = 4 rows in module labels, with the dropped empty row
std::vector<CheckResult> verify_sections();

// structural sweeps: triangularity of every matrix, stability up the tower,
// singularity steps at box removals, diagram splicing, restriction dimensions
std::vector<CheckResult> verify_props(int max_n);

// nonzero homomorphism at every cover pair of the label set of size max_m
// (conjugated labels), and the exceptional n = 2 value at delta = 0
std::vector<CheckResult> verify_homs(int max_m, const std::vector<int>& deltas);

}  // namespace brauerdm
