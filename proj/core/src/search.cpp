#include <algorithm>
#include <bit>
#include <numeric>

#include "fracx/coloring.hpp"
#include "fracx/errors.hpp"

namespace fracx {

namespace {

constexpr int kMaxPalette = 62;

struct Searcher {
    const Graph& g;
    int palette;
    std::vector<int> order;      // vertices, descending degree then id
    std::vector<int> class_size; // per vertex (original labels)
    long long budget;
    long long nodes = 0;
    std::vector<std::uint64_t> assigned; // per vertex (original labels); ~0 = none

    bool exhausted_budget = false;

    bool feasible_ahead(std::size_t depth) const {
        for (std::size_t i = depth; i < order.size(); ++i) {
            int v = order[i];
            std::uint64_t blocked = 0;
            std::uint64_t nbrs = g.neighbors(v);
            while (nbrs) {
                int u = std::countr_zero(nbrs);
                nbrs &= nbrs - 1;
                if (assigned[static_cast<std::size_t>(u)] != ~std::uint64_t{0})
                    blocked |= assigned[static_cast<std::size_t>(u)];
            }
            std::uint64_t avail = ~blocked & ((palette == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << palette) - 1));
            if (std::popcount(avail) < class_size[static_cast<std::size_t>(v)]) return false;
        }
        return true;
    }

    // Enumerates k-subsets of the set bits of avail, lowest colors first.
    bool dfs(std::size_t depth) {
        if (depth == order.size()) return true;
        int v = order[depth];
        int k = class_size[static_cast<std::size_t>(v)];

        std::uint64_t blocked = 0;
        std::uint64_t nbrs = g.neighbors(v);
        while (nbrs) {
            int u = std::countr_zero(nbrs);
            nbrs &= nbrs - 1;
            if (assigned[static_cast<std::size_t>(u)] != ~std::uint64_t{0})
                blocked |= assigned[static_cast<std::size_t>(u)];
        }
        std::vector<int> avail;
        for (int c = 0; c < palette; ++c)
            if (!(blocked >> c & 1)) avail.push_back(c);
        if (static_cast<int>(avail.size()) < k) return false;

        std::vector<int> pick(static_cast<std::size_t>(k));
        std::iota(pick.begin(), pick.end(), 0);
        bool pinned = depth == 0; // any solution can permute colors onto the lowest block
        while (true) {
            if (nodes++ >= budget) {
                exhausted_budget = true;
                return false;
            }
            std::uint64_t mask = 0;
            for (int idx : pick) mask |= std::uint64_t{1} << avail[static_cast<std::size_t>(idx)];
            assigned[static_cast<std::size_t>(v)] = mask;
            if (feasible_ahead(depth + 1) && dfs(depth + 1)) return true;
            assigned[static_cast<std::size_t>(v)] = ~std::uint64_t{0};
            if (exhausted_budget || pinned || k == 0) return false;
            // next index combination, rightmost first
            int pos = k - 1;
            while (pos >= 0 &&
                   pick[static_cast<std::size_t>(pos)] == static_cast<int>(avail.size()) - k + pos)
                --pos;
            if (pos < 0) return false;
            ++pick[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < k; ++i)
                pick[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
};

} // namespace

SearchResult search_set_coloring(const Graph& g, const DemandFunction& f, int palette_size,
                                 const SearchOptions& opts) {
    if (f.size() != g.vertex_count()) throw InputError("demand size mismatch");
    if (palette_size < 0 || palette_size > kMaxPalette)
        throw InputError("search palette must have 0..62 colors, got " +
                         std::to_string(palette_size));
    Searcher s{g, palette_size, {}, {}, opts.budget, 0, {}, false};
    s.class_size.resize(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        Rational scaled = Rational(palette_size) * f[v];
        if (!scaled.is_integer())
            throw InputError(std::to_string(palette_size) +
                             " is not a common denominator for the demands");
        s.class_size[static_cast<std::size_t>(v)] = static_cast<int>(scaled.numerator().get_si());
    }
    s.order.resize(static_cast<std::size_t>(g.vertex_count()));
    std::iota(s.order.begin(), s.order.end(), 0);
    std::sort(s.order.begin(), s.order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    s.assigned.assign(static_cast<std::size_t>(g.vertex_count()), ~std::uint64_t{0});

    SearchResult result;
    bool found = s.dfs(0);
    result.nodes = s.nodes;
    if (found) {
        SetColoring c;
        c.palette_size = palette_size;
        c.classes.resize(static_cast<std::size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int bit : set_to_vertices(s.assigned[static_cast<std::size_t>(v)]))
                c.classes[static_cast<std::size_t>(v)].push_back(bit + 1);
        result.outcome = SearchOutcome::Found;
        result.coloring = std::move(c);
    } else {
        result.outcome =
            s.exhausted_budget ? SearchOutcome::BudgetExceeded : SearchOutcome::ExhaustedNone;
    }
    return result;
}

SearchResult search_ab_coloring(const Graph& g, int a, int b, const SearchOptions& opts) {
    if (b < 1 || a < b) throw InputError("need palette >= class size >= 1");
    return search_set_coloring(g, DemandFunction::uniform(g.vertex_count(), Rational(b, a)), a,
                               opts);
}

} // namespace fracx
