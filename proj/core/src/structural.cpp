#include "fracx/structural.hpp"

#include <algorithm>
#include <bit>

namespace fracx {

namespace {

// Component count with up to two edges suppressed.
int component_count(const Graph& g, Edge skip1 = {-1, -1}, Edge skip2 = {-1, -1}) {
    int n = g.vertex_count();
    std::uint64_t seen = 0;
    int components = 0;
    auto suppressed = [&](int u, int v) {
        Edge e = u < v ? Edge{u, v} : Edge{v, u};
        return e == skip1 || e == skip2;
    };
    for (int s = 0; s < n; ++s) {
        if (seen >> s & 1) continue;
        ++components;
        std::vector<int> stack{s};
        seen |= std::uint64_t{1} << s;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            std::uint64_t rest = g.neighbors(x) & ~seen;
            while (rest) {
                int y = std::countr_zero(rest);
                rest &= rest - 1;
                if (suppressed(x, y)) continue;
                seen |= std::uint64_t{1} << y;
                stack.push_back(y);
            }
        }
    }
    return components;
}

// Shortest u-v distance with one edge suppressed; -1 when unreachable.
int bfs_distance_skipping(const Graph& g, int from, int to, Edge skip) {
    std::array<int, Graph::kMaxVertices> dist{};
    dist.fill(-1);
    dist[static_cast<std::size_t>(from)] = 0;
    std::vector<int> queue{from};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        std::uint64_t rest = g.neighbors(x);
        while (rest) {
            int y = std::countr_zero(rest);
            rest &= rest - 1;
            Edge e = x < y ? Edge{x, y} : Edge{y, x};
            if (e == skip) continue;
            if (dist[static_cast<std::size_t>(y)] < 0) {
                dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                if (y == to) return dist[static_cast<std::size_t>(y)];
                queue.push_back(y);
            }
        }
    }
    return dist[static_cast<std::size_t>(to)];
}

} // namespace

bool is_connected(const Graph& g) {
    return component_count(g) <= 1;
}

bool is_triangle_free(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (g.neighbors(u) & g.neighbors(v)) return false;
    return true;
}

std::optional<int> girth(const Graph& g) {
    // Shortest cycle through edge uv = dist(u, v) in G - uv, plus one.
    std::optional<int> best;
    for (Edge e : g.edges()) {
        int d = bfs_distance_skipping(g, e.first, e.second, e);
        if (d >= 0) {
            int cycle = d + 1;
            if (!best || cycle < *best) best = cycle;
        }
    }
    return best;
}

StructuralReport structural_report(const Graph& g) {
    StructuralReport r;
    int n = g.vertex_count();
    r.degrees.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        r.degrees[static_cast<std::size_t>(v)] = g.degree(v);
        r.max_degree = std::max(r.max_degree, g.degree(v));
    }
    r.is_subcubic = r.max_degree <= 3;
    r.is_triangle_free = is_triangle_free(g);
    r.girth = girth(g);
    r.is_connected = is_connected(g);

    int base_components = component_count(g);
    std::vector<Edge> edges = g.edges();
    for (Edge e : edges)
        if (component_count(g, e) > base_components) r.bridges.push_back(e);
    r.is_two_edge_connected = r.is_connected && n >= 2 && r.bridges.empty();

    std::vector<Edge> non_bridges;
    for (Edge e : edges)
        if (std::find(r.bridges.begin(), r.bridges.end(), e) == r.bridges.end())
            non_bridges.push_back(e);
    for (std::size_t i = 0; i < non_bridges.size(); ++i)
        for (std::size_t j = i + 1; j < non_bridges.size(); ++j)
            if (component_count(g, non_bridges[i], non_bridges[j]) > base_components)
                r.two_edge_cuts.push_back({non_bridges[i], non_bridges[j]});
    return r;
}

} // namespace fracx
