#include "graphzeta/graph.hpp"
#include "graphzeta/errors.hpp"

#include <algorithm>
#include <string>

namespace graphzeta {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count) {
    if (vertex_count < 0) throw DomainError("vertex count must be >= 0");
    edges_.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        const std::string where = "edges[" + std::to_string(i) + "]";
        if (u == v)
            throw DomainError(where + ": self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw DomainError(where + ": vertex index out of range [0, " +
                              std::to_string(vertex_count) + ")");
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw DomainError("duplicate edge {" + std::to_string(dup->first) + ", " +
                          std::to_string(dup->second) + "}");

    oriented_.reserve(2 * edges_.size());
    out_edges_.assign(static_cast<std::size_t>(vertex_count_), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const int fwd = static_cast<int>(2 * i);
        const auto [u, v] = edges_[i];
        oriented_.push_back({fwd, u, v, fwd + 1, static_cast<int>(i)});
        oriented_.push_back({fwd + 1, v, u, fwd, static_cast<int>(i)});
        out_edges_[static_cast<std::size_t>(u)].push_back(fwd);
        out_edges_[static_cast<std::size_t>(v)].push_back(fwd + 1);
    }
}

Graph Graph::cycle(int n) {
    if (n < 3) throw DomainError("cycle graph needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

Graph Graph::complete_bipartite(int m, int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) e.emplace_back(i, m + j);
    return Graph(m + n, std::move(e));
}

Graph Graph::petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5); // outer pentagon
        e.emplace_back(i, 5 + i);       // spokes
        e.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
    }
    return Graph(10, std::move(e));
}

Graph Graph::star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, std::move(e));
}

Graph Graph::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph Graph::disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> e = a.edges();
    for (auto [u, v] : b.edges()) e.emplace_back(u + a.vertex_count(), v + a.vertex_count());
    return Graph(a.vertex_count() + b.vertex_count(), std::move(e));
}

const std::vector<int>& Graph::out_edges(int v) const {
    if (v < 0 || v >= vertex_count_) throw DomainError("vertex index out of range");
    return out_edges_[static_cast<std::size_t>(v)];
}

std::optional<int> Graph::edge_index(int u, int v) const {
    const std::pair<int, int> key{std::min(u, v), std::max(u, v)};
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

std::optional<int> Graph::regularity() const {
    if (vertex_count_ == 0) return std::nullopt;
    const int d = valency(0);
    for (int v = 1; v < vertex_count_; ++v)
        if (valency(v) != d) return std::nullopt;
    return d;
}

bool Graph::is_connected() const {
    if (vertex_count_ <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(vertex_count_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int oe : out_edges_[static_cast<std::size_t>(v)]) {
            const int w = oriented_[static_cast<std::size_t>(oe)].target;
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == vertex_count_;
}

} // namespace graphzeta
