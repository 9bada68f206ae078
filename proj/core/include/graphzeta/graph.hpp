#ifndef GRAPHZETA_GRAPH_HPP
#define GRAPHZETA_GRAPH_HPP

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace graphzeta {

/// One orientation of an undirected edge. Ids are contiguous in
/// [0, 2*edge_count); the reverse orientation is always id ^ 1.
struct OrientedEdge {
    int id;
    int start;
    int target;
    int reverse_id;
    int underlying; ///< index into Graph::edges()
};

/// Finite simple undirected graph. Immutable after construction; edges are
/// stored sorted by (min endpoint, max endpoint), which fixes the oriented
/// edge ordering and makes every downstream matrix and report reproducible.
class Graph {
public:
    /// Validates and canonicalizes. Throws DomainError on self-loops,
    /// duplicate edges or out-of-range endpoints (message names the entry).
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

    static Graph cycle(int n);
    static Graph complete(int n);
    static Graph complete_bipartite(int m, int n);
    static Graph petersen();
    static Graph star(int leaves);
    static Graph path(int n);
    static Graph disjoint_union(const Graph& a, const Graph& b);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// All 2*edge_count oriented edges, forward orientation (min -> max)
    /// immediately before its reverse.
    const std::vector<OrientedEdge>& oriented_edges() const { return oriented_; }
    static int reverse(int oriented_id) { return oriented_id ^ 1; }
    /// Oriented edge ids leaving v, ascending.
    const std::vector<int>& out_edges(int v) const;
    /// Index into edges() for the pair {u, v}, if present.
    std::optional<int> edge_index(int u, int v) const;

    int valency(int v) const { return static_cast<int>(out_edges(v).size()); }
    /// Common valency if the graph is regular, absent otherwise.
    /// Graphs without vertices have no valency to share: absent.
    std::optional<int> regularity() const;
    bool is_connected() const;

private:
    int vertex_count_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<OrientedEdge> oriented_;
    std::vector<std::vector<int>> out_edges_;
};

/// Parses the canonical graph JSON document:
///   {"vertices": n, "edges": [[u, v], ...]}
/// Throws ParseError with the offending field on malformed input.
Graph parse_graph(std::string_view document);

} // namespace graphzeta

#endif
