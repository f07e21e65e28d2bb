#ifndef FRACX_STRUCTURAL_HPP
#define FRACX_STRUCTURAL_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "fracx/graph.hpp"

namespace fracx {

using Edge = std::pair<int, int>; // always (u, v) with u < v

struct StructuralReport {
    std::vector<int> degrees;
    int max_degree = 0;
    bool is_subcubic = false;
    bool is_triangle_free = false;
    std::optional<int> girth; // nullopt when acyclic
    std::vector<Edge> bridges;
    bool is_two_edge_connected = false;
    std::vector<std::array<Edge, 2>> two_edge_cuts; // pairs of distinct non-bridge edges
    bool is_connected = false;
};

StructuralReport structural_report(const Graph& g);

bool is_connected(const Graph& g);
bool is_triangle_free(const Graph& g);
std::optional<int> girth(const Graph& g);

} // namespace fracx

#endif
