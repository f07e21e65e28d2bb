#ifndef FRACX_STRUCTURE_HPP
#define FRACX_STRUCTURE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fracx/demand.hpp"
#include "fracx/graph.hpp"
#include "fracx/rational.hpp"

namespace fracx {

enum class DangerousKind { C5, K4Prime };

std::string to_string(DangerousKind kind);

/// An induced subgraph that is a 5-cycle or a K4 with both perfect-matching
/// edges subdivided twice.  "special" holds the vertices of degree two
/// inside the occurrence.
struct DangerousOccurrence {
    DangerousKind kind;
    std::uint64_t vertices;
    std::uint64_t special;

    bool operator==(const DangerousOccurrence&) const = default;
};

/// Every induced occurrence, each vertex set once, ordered by (kind, set).
std::vector<DangerousOccurrence> find_dangerous_induced(const Graph& g);

struct NailReport {
    bool is_nail = false;
    std::vector<int> degree_violations;              // members of B with degree >= 3
    std::vector<DangerousOccurrence> bad_occurrences; // fewer than two B-safe special vertices
};

/// B is a nail when every member has degree at most two and every dangerous
/// induced subgraph has at least two special vertices v with v in B or
/// deg(v) = 3.
NailReport is_nail(const Graph& g, std::uint64_t b);

/// Demand (7 - deg)/14 on B and (8 - deg)/14 elsewhere.  Requires a
/// subcubic graph.
DemandFunction fb_demand(const Graph& g, std::uint64_t b);

struct WeightScores {
    std::vector<Rational> scores; // 9 w(v) - 5 * (distance-1 sum) + (distance-2 sum)
    Rational total;
    std::optional<int> argmax; // smallest id among maximizers; absent for n = 0
};

WeightScores weight_scores(const Graph& g, const std::vector<Rational>& w);

} // namespace fracx

#endif
