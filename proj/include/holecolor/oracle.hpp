#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "holecolor/model.hpp"

namespace holecolor {

// Exact search refuses graphs above this many vertices unless the caller
// raises the guard explicitly. Exceeding it is an error, never a silent
// approximation.
inline constexpr std::size_t kDefaultExactSearchGuard = 26;

// Simple undirected graph over vertices kept in canonical order.
class AdjacencyGraph {
public:
    AdjacencyGraph() = default;
    explicit AdjacencyGraph(VertexSet vertices);

    int size() const { return static_cast<int>(verts_.size()); }
    const VertexId& vertex(int index) const { return verts_[index]; }
    const VertexSet& vertices() const { return verts_; }
    int index_of(const VertexId& id) const;  // -1 when absent

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return adj_[u][v] != 0; }
    int degree(int v) const { return degree_[v]; }
    long long edge_count() const { return edges_; }

private:
    VertexSet verts_;
    std::vector<std::vector<char>> adj_;
    std::vector<int> degree_;
    long long edges_ = 0;
};

// Union of the per-clique complete graphs.
AdjacencyGraph build_graph(const CliqueHole& hole);
// Union of the complete graphs on each pair of adjacent sectors.
AdjacencyGraph build_graph(const Ring& ring);

// The first maximum clique in lexicographic search order. Intended for
// guard-scale graphs.
VertexSet first_maximum_clique(const AdjacencyGraph& g);

// Exact k-colorability by backtracking with clique symmetry breaking.
// Returns a witness coloring when one exists. Deterministic: identical
// input produces an identical verdict and witness.
std::optional<Coloring> is_k_colorable(const AdjacencyGraph& g, int k,
                                       std::size_t guard = kDefaultExactSearchGuard);

// Least k admitting a proper k-coloring.
int chromatic_number(const AdjacencyGraph& g, std::size_t guard = kDefaultExactSearchGuard);

// All independent sets of size exactly floor(m/2) of an odd ring, via
// sector-indexed backtracking (at most one vertex per sector, adjacent
// sectors never both used). Emission order is deterministic.
std::vector<VertexSet> enumerate_max_independent_sets(const Ring& ring,
                                                      std::size_t guard = kDefaultExactSearchGuard);

// The unique family a maximum independent set of an odd ring belongs to:
// the set misses the consecutive sectors i-2, i-1 and touches exactly one
// vertex of each sector in the family shape.
IndependentSetFamilyIndex classify_mis(const Ring& ring, const VertexSet& candidate);

struct CheckResult {
    bool ok = false;
    std::vector<std::string> violations;
};

// Checks totality over the graph's vertex set, color indices < k, and the
// absence of monochromatic edges. Lists every violation.
CheckResult verify_coloring(const AdjacencyGraph& g, const Coloring& coloring, int k);

}  // namespace holecolor
