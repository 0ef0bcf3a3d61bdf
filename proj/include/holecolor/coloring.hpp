#pragma once

#include <cstddef>
#include <optional>

#include "holecolor/balancing.hpp"
#include "holecolor/colorability.hpp"
#include "holecolor/model.hpp"
#include "holecolor/oracle.hpp"

namespace holecolor {

// m pairwise-disjoint maximum independent sets covering an extreme odd
// ring, each annotated with its family index.
struct MISPartition {
    std::vector<VertexSet> sets;
    std::vector<int> family;  // family[k]: 0-based index of sets[k]'s family
};

// Virtual vertices added per sector to lift a sub-extreme profile to the
// extreme sum.
struct PaddingPlan {
    RingProfile original;
    RingProfile padded;
    std::vector<VertexSet> virtual_vertices;

    bool identity() const { return original == padded; }
};

struct ColorOptions {
    std::size_t oracle_guard = kDefaultExactSearchGuard;
    DeficitPicker picker;  // empty: smallest_index_picker()
};

enum class FallbackOutcome {
    not_engaged,      // regular constructive path
    oracle_coloring,  // padding stuck; exact search produced the coloring
};

struct RingColoringResult {
    Coloring coloring;
    ColorabilityVerdict verdict;
    std::optional<PaddingPlan> padding;
    // Trace and partition refer to the padded ring when padding applied.
    std::optional<BalancingTrace> trace;
    std::optional<MISPartition> partition;
    FallbackOutcome fallback = FallbackOutcome::not_engaged;
};

struct HoleColoringResult {
    Coloring coloring;
    ColorabilityVerdict verdict;
    std::optional<PaddingPlan> padding;
    std::optional<BalancingTrace> trace;
    std::optional<MISPartition> partition;
    FallbackOutcome fallback = FallbackOutcome::not_engaged;
};

// Materializes the selection counts into concrete sets: for each family i
// with counts.s[i] > 0, emits that many sets of the family shape, filling
// every slot with the next unused vertex of the demanded sector in
// canonical order. Requires coverage_sums(counts) == profile_of(ring).
MISPartition build_partition(const Ring& ring, const SelectionCounts& counts);

// Greedy lift of a sub-extreme odd profile to the extreme sum: repeatedly
// increment a sector whose both adjacent pair sums are below m, choosing
// the sector minimizing a[i-1] + 2a[i] + a[i+1] (ties to the smallest
// index). Throws PaddingStuck when no sector can grow before the target.
PaddingPlan pad_to_extreme(const RingProfile& profile);

// Even-m scheme: sector i takes colors {0..|A_i|-1} when i is odd in
// 1-based terms and {m-1 down to m-|A_i|} when even; proper because
// adjacent pair sums never exceed m.
Coloring color_even_ring(const Ring& ring);

// Odd-m pipeline: pad to the extreme sum if needed, balance, materialize
// the partition, color set k with color k, strip padding vertices. When
// padding is stuck, falls back to guarded exact search; when that is also
// unavailable, throws Unresolved with deterministic diagnostics.
RingColoringResult color_odd_ring(const Ring& ring, const ColorOptions& options = {});

// Colors the private vertices of each clique greedily with the lowest
// color unused in that clique so far, in canonical vertex order. Never
// recolors a ring vertex.
Coloring extend_to_hole(const CliqueHole& hole, const Coloring& ring_coloring);

// Full pipeline: validate, decide, color the ring by parity, extend to
// the hole, and re-verify the result before returning it.
HoleColoringResult color_hole(const CliqueHole& hole, const ColorOptions& options = {});

}  // namespace holecolor
