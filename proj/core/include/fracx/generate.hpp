#ifndef FRACX_GENERATE_HPP
#define FRACX_GENERATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fracx/graph.hpp"

namespace fracx {

/// Isomorphism key.  For n <= 10 the key is complete: two graphs get equal
/// keys exactly when they are isomorphic (minimum adjacency string over all
/// vertex orders compatible with an invariant partition).  For larger n a
/// refinement-only key is used: isomorphic graphs still collide, but
/// distinct classes are not guaranteed to separate.
std::string canonical_key(const Graph& g);

/// One representative per isomorphism class of connected graphs on n
/// vertices with maximum degree <= 3 and no triangle, deterministic order.
/// Requires 1 <= n <= 10.
std::vector<Graph> enumerate_subcubic_trianglefree(int n);

/// Single-consumer stream over enumerate_subcubic_trianglefree(n).
class SubcubicTriangleFreeStream {
public:
    explicit SubcubicTriangleFreeStream(int n) : graphs_(enumerate_subcubic_trianglefree(n)) {}
    std::optional<Graph> next() {
        if (index_ >= graphs_.size()) return std::nullopt;
        return graphs_[index_++];
    }

private:
    std::vector<Graph> graphs_;
    std::size_t index_ = 0;
};

/// Deterministic sampler: repeated random edge addition rejecting moves that
/// create a triangle or a degree above 3, followed by connectivity repair.
/// Identical (n, seed) gives an identical graph; falls back to a path when
/// repair keeps failing.  Requires 1 <= n <= 62.
Graph random_subcubic_trianglefree(int n, std::uint64_t seed);

} // namespace fracx

#endif
