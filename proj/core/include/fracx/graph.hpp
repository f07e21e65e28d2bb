#ifndef FRACX_GRAPH_HPP
#define FRACX_GRAPH_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fracx {

/// Immutable undirected simple graph on at most 62 vertices.  Adjacency is
/// one 64-bit neighbor mask per vertex; vertex v corresponds to bit v.
class Graph {
public:
    static constexpr int kMaxVertices = 62;

    Graph() = default;

    static Graph empty(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    std::uint64_t neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    /// Mask with the low n bits set.
    std::uint64_t vertex_mask() const;

    /// All edges as (u, v) with u < v, ascending.
    std::vector<std::pair<int, int>> edges() const;

    Graph with_edge(int u, int v) const;
    Graph deleting_edge(int u, int v) const;
    /// Removes v and relabels vertices above it downward.
    Graph deleting_vertex(int v) const;

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::array<std::uint64_t, kMaxVertices> adj_{};
};

/// Helpers for vertex sets stored as bit masks.
std::vector<int> set_to_vertices(std::uint64_t set);
std::uint64_t vertices_to_set(const std::vector<int>& vs, int n);

/// Decodes graph6 text (optional ">>graph6<<" header, surrounding whitespace
/// tolerated).  Only the single-character size form (n <= 62) is supported.
Graph parse_graph6(const std::string& text);

/// Canonical graph6 encoding, no header.  Exact inverse of parse_graph6 on
/// the same labeling.
std::string encode_graph6(const Graph& g);

/// Edge-list text: '#' starts a comment, the first payload line is
/// "n <vertex count>", every following line is one "u v" pair, 0-indexed.
Graph parse_edge_list(const std::string& text);

/// Fixed labeled instances: k2, path_k (k>=2), cycle_k (k>=3), c5, k4prime,
/// petersen, gp_7_2.
Graph named_graph(const std::string& name);

} // namespace fracx

#endif
