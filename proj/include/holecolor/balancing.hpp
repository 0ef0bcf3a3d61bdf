#pragma once

#include <functional>
#include <vector>

#include "holecolor/model.hpp"

namespace holecolor {

// Full record of one balancing run: the state at every iteration boundary,
// the executed cardinality moves, and the final selection counts.
struct BalancingTrace {
    std::vector<TraceRecord> records;  // iterations + 1 entries
    SelectionCounts final_counts;
    std::vector<TransformationMove> moves;

    int iterations() const { return static_cast<int>(moves.size()); }
};

// Strategy for choosing among the admissible deficit sectors of one
// iteration. `candidates` lists the qualifying 0-based indices in
// ascending order and is never empty.
using DeficitPicker = std::function<int(const std::vector<int>& candidates, int iteration)>;

// Default rule: the smallest qualifying index.
DeficitPicker smallest_index_picker();

// Replays an explicit 0-based choice sequence. Throws DomainError when the
// sequence is exhausted or names a non-admissible index.
DeficitPicker scripted_picker(std::vector<int> picks);

// Rebalances an extreme odd profile while tracking how the balanced
// ring's one-set-per-family selection transforms back to the input:
//
//   s[k] <- 1 for all k
//   while B = {k : a[k] < n} is non-empty:
//     i <- picker's choice among {k in B : a[k-1] + a[k] <= 2n}
//     j <- first cyclic successor of i with a[j] > n
//     s[i+1]++, s[i+2]++, s[j+1]--, s[j+2]--
//     a[j]--, a[i]++
//
// (n = floor(m/2); increments are applied before decrements and the
// counts are asserted non-negative only at iteration boundaries.)
// Terminates after exactly the initial total deficit many iterations; at
// that point coverage_sums(final_counts) reproduces the input profile.
BalancingTrace balance_and_count(const RingProfile& profile,
                                 const DeficitPicker& picker = smallest_index_picker());

// Entry j counts the selected independent sets that demand a vertex of
// sector j: sum over k = 0..n-1 of s[(j - 2k) mod m].
std::vector<int> coverage_sums(const SelectionCounts& counts);

}  // namespace holecolor
