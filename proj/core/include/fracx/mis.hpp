#ifndef FRACX_MIS_HPP
#define FRACX_MIS_HPP

#include <cstdint>
#include <vector>

#include "fracx/graph.hpp"

namespace fracx {

struct MisOptions {
    std::size_t cap = 2'000'000; // enumeration guard
};

/// All inclusion-maximal independent sets as bit masks, ascending by mask
/// value.  Throws ResourceLimitError when more than opts.cap sets exist.
std::vector<std::uint64_t> maximal_independent_sets(const Graph& g, const MisOptions& opts = {});

/// Size of a largest independent set; 0 for the empty graph.
int independence_number(const Graph& g, const MisOptions& opts = {});

bool is_independent_set(const Graph& g, std::uint64_t set);
bool is_maximal_independent_set(const Graph& g, std::uint64_t set);

} // namespace fracx

#endif
