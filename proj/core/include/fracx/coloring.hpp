#ifndef FRACX_COLORING_HPP
#define FRACX_COLORING_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fracx/demand.hpp"
#include "fracx/graph.hpp"
#include "fracx/lp.hpp"

namespace fracx {

/// Per-vertex subsets of the palette {1..N}; valid for (g, f) when every
/// class has size at least N*f(v) and adjacent classes are disjoint.
struct SetColoring {
    int palette_size = 0;                  // N
    std::vector<std::vector<int>> classes; // sorted ascending, colors in 1..N

    bool operator==(const SetColoring&) const = default;
};

struct ColoringViolation {
    enum class Kind { Size, Conflict };
    Kind kind = Kind::Size;
    int vertex = -1;                  // size violations
    std::pair<int, int> edge{-1, -1}; // conflicts
    std::vector<int> shared_colors;   // conflicts
};

struct VerifyResult {
    bool accepted = false;
    std::optional<ColoringViolation> violation;
};

/// Checks |psi(v)| >= N f(v) (exact rational comparison) for every vertex,
/// then disjointness over edges in ascending order; reports the first
/// violation.  Colors outside {1..N} are malformed input, not a rejection.
VerifyResult verify_set_coloring(const Graph& g, const DemandFunction& f, const SetColoring& c);

/// Builds a coloring from a fractional cover of value at most 1: N is the
/// least common denominator of the demands and the support weights, the
/// palette splits into consecutive blocks sized N*x(I) per support set, and
/// each vertex takes the blocks of the sets containing it.
SetColoring lp_to_set_coloring(const Graph& g, const DemandFunction& f, const LPSolution& sol);

/// Replaces each color by m/N fresh colors (m must be a multiple of N).
SetColoring refine_coloring(const SetColoring& c, int m);

/// Middle class for a path x-y-z whose ends are already colored: exists
/// exactly when |a union c| <= (1 - f(y)) N.  Returns the least such set.
/// f3 holds the demands of (x, y, z).
std::optional<std::vector<int>> extend_path_p3(const std::vector<int>& a_colors,
                                               const std::vector<int>& c_colors,
                                               const DemandFunction& f3, int palette_size);

/// Middle classes for a path x-v-y-z with colored ends; with exact end
/// sizes this succeeds exactly when |a intersect d| <= (1 - f(v) - f(y)) N.
/// f4 holds the demands of (x, v, y, z).
std::optional<std::pair<std::vector<int>, std::vector<int>>> extend_path_p4(
    const std::vector<int>& a_colors, const std::vector<int>& d_colors, const DemandFunction& f4,
    int palette_size);

enum class SearchOutcome { Found, ExhaustedNone, BudgetExceeded };

struct SearchOptions {
    long long budget = 100'000'000; // candidate assignments tried
};

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::ExhaustedNone;
    std::optional<SetColoring> coloring;
    long long nodes = 0;
};

/// Exhaustive backtracking for a coloring with exact class sizes N*f(v)
/// (N must be a common denominator).  Vertices are ordered by descending
/// degree, classes are tried lowest colors first, and the first vertex is
/// pinned to the lowest block.
SearchResult search_set_coloring(const Graph& g, const DemandFunction& f, int palette_size,
                                 const SearchOptions& opts = {});

/// b colors from a palette of a per vertex, adjacent classes disjoint.
SearchResult search_ab_coloring(const Graph& g, int a, int b, const SearchOptions& opts = {});

/// Text form: header "N=<int>", then one "v: c1,c2,..." line per vertex;
/// '#' comments allowed, missing vertices get the empty class.
SetColoring parse_set_coloring(const std::string& text, int n_vertices);
std::string format_set_coloring(const SetColoring& c);

} // namespace fracx

#endif
