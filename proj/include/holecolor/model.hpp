#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holecolor/errors.hpp"

namespace holecolor {

// Vertex identifier: an opaque printable token, unique within an instance.
using VertexId = std::string;

// Vertex set in canonical form: lexicographically sorted, duplicate-free.
using VertexSet = std::vector<VertexId>;

// Reserved prefix for padding vertices introduced by the odd-m coloring
// path. Instance documents must not contain ids with this prefix.
inline const std::string kVirtualVertexPrefix = "~pad/";

bool is_virtual_vertex(const VertexId& id);

VertexSet make_vertex_set(std::vector<VertexId> items);
bool set_contains(const VertexSet& set, const VertexId& id);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

// Normalizes a possibly negative index into [0, m). All sector and clique
// arithmetic wraps cyclically.
int cyclic(int index, int m);

// Renders (5,2,3,4,1,4,2) for messages and diagnostics.
std::string profile_to_string(const std::vector<int>& values);

// Ordered sequence of m cliques whose pairwise intersections follow the
// cyclic pattern of a hole: consecutive cliques overlap, nothing else does.
struct CliqueHole {
    std::vector<VertexSet> cliques;

    int m() const { return static_cast<int>(cliques.size()); }
    VertexSet vertices() const;

    bool operator==(const CliqueHole&) const = default;
};

struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

// Raised by operations that require a structurally valid input document.
class ValidationError : public Error {
public:
    ValidationError(const std::string& message, ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

// The structure induced on the overlaps of consecutive cliques:
// m disjoint sectors arranged in a cycle, each sector a clique, adjacent
// sectors fully joined.
struct Ring {
    std::vector<VertexSet> sectors;
    std::optional<CliqueHole> origin;

    int m() const { return static_cast<int>(sectors.size()); }
    VertexSet vertices() const;
    std::optional<int> sector_of(const VertexId& id) const;

    bool operator==(const Ring& other) const { return sectors == other.sectors; }
};

// Sector cardinalities; the balancing algorithm manipulates these.
struct RingProfile {
    std::vector<int> a;

    int m() const { return static_cast<int>(a.size()); }
    // Balanced per-sector cardinality, floor(m/2).
    int half() const { return m() / 2; }
    long long sum() const;
    long long bound() const { return static_cast<long long>(m()) * half(); }
    bool extreme() const { return sum() == bound(); }

    bool operator==(const RingProfile&) const = default;
};

// Structural violations of the profile invariants (m >= 4, entries >= 1,
// cyclic pair sums <= m). Empty result means valid. The extreme sum is a
// separate, situational requirement.
std::vector<std::string> profile_violations(const RingProfile& profile);

enum class MoveDirection { down, up };

// One cardinality move: sector `from` loses a vertex, sector `to` gains
// one. Endpoints may be cyclically distant; the move then stands for the
// chain of single-step transfers walked along `dir`.
struct TransformationMove {
    int from = 0;
    int to = 0;
    MoveDirection dir = MoveDirection::down;

    bool operator==(const TransformationMove&) const = default;
};

// How many of the m chosen maximum independent sets are drawn from each
// family. Totals m at every iteration boundary of a balancing run.
struct SelectionCounts {
    std::vector<int> s;

    int m() const { return static_cast<int>(s.size()); }
    long long total() const;

    bool operator==(const SelectionCounts&) const = default;
};

// Family identity of a maximum independent set: the family index and the
// sector shape {i, i+2, ..., i+2(n-1)} mod m (all 0-based).
struct IndependentSetFamilyIndex {
    int pi_index = 0;
    std::vector<int> shape;

    bool operator==(const IndependentSetFamilyIndex&) const = default;
};

// Sectors demanded by family i: {i, i+2, ..., i+2(n-1)} mod m.
std::vector<int> family_shape(int pi_index, int m);

// Total map from vertex ids to color indices 0..m-1.
struct Coloring {
    std::map<VertexId, int> assignment;

    std::optional<int> color_of(const VertexId& id) const;

    bool operator==(const Coloring&) const = default;
};

// One column of a balancing trace: the state at an iteration boundary plus
// the decision taken from that state (absent in the final record).
struct TraceRecord {
    int iteration = 0;
    std::vector<int> profile;
    std::vector<int> selection;
    std::vector<int> deficit;  // ascending, 0-based
    std::optional<int> chosen_i;
    std::optional<int> chosen_j;

    bool operator==(const TraceRecord&) const = default;
};

// Checks every structural invariant of an m-clique hole and reports all
// violations. Never throws; an empty report means the hole is valid.
ValidationReport validate_clique_hole(const CliqueHole& hole);

// Sector extraction: sectors[i] = cliques[i] overlapped with cliques[i+1],
// cyclic. Throws InvalidHole when the input fails validation.
Ring extract_ring(const CliqueHole& hole);

RingProfile profile_of(const Ring& ring);

bool is_balanced(const RingProfile& profile);

// For an unbalanced profile, the smallest sector index i with a[i] below
// the balanced cardinality and a[i-1] + a[i] <= 2 * floor(m/2); nothing
// for balanced profiles. A witness exists for every valid profile whose
// sum stays within the colorability bound; its absence on an unbalanced
// profile raises InternalInvariant.
std::optional<int> deficit_witness(const RingProfile& profile);

// Applies a cardinality move. The result must satisfy every profile
// invariant, otherwise the move is rejected with InvalidMove.
RingProfile apply_move(const RingProfile& profile, const TransformationMove& move);

// Swaps endpoints (and traversal direction); applying a move and then its
// inverse restores the original profile whenever both applications are
// valid.
TransformationMove invert_move(const TransformationMove& move);

}  // namespace holecolor
