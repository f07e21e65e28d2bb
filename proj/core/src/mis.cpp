#include "fracx/mis.hpp"

#include <algorithm>
#include <bit>

#include "fracx/errors.hpp"

namespace fracx {

namespace {

// Maximal independent sets of g are the maximal cliques of its complement;
// this is Bron-Kerbosch with pivoting run on the complement adjacency.
struct Enumerator {
    const Graph& g;
    std::size_t cap;
    std::uint64_t all;
    std::vector<std::uint64_t> out;

    std::uint64_t conn(int v) const { // complement neighborhood
        return ~g.neighbors(v) & ~(std::uint64_t{1} << v) & all;
    }

    void expand(std::uint64_t r, std::uint64_t p, std::uint64_t x) {
        if (p == 0 && x == 0) {
            if (out.size() >= cap)
                throw ResourceLimitError("maximal independent set cap exceeded (cap = " +
                                             std::to_string(cap) + ")",
                                         static_cast<long long>(cap));
            out.push_back(r);
            return;
        }
        // Pivot: vertex of P|X with the most complement-neighbors inside P.
        int pivot = -1, best = -1;
        std::uint64_t cand = p | x;
        while (cand) {
            int u = std::countr_zero(cand);
            cand &= cand - 1;
            int score = std::popcount(p & conn(u));
            if (score > best) {
                best = score;
                pivot = u;
            }
        }
        std::uint64_t work = p & ~conn(pivot);
        while (work) {
            int v = std::countr_zero(work);
            std::uint64_t bit = std::uint64_t{1} << v;
            work &= work - 1;
            expand(r | bit, p & conn(v), x & conn(v));
            p &= ~bit;
            x |= bit;
        }
    }
};

} // namespace

std::vector<std::uint64_t> maximal_independent_sets(const Graph& g, const MisOptions& opts) {
    Enumerator e{g, opts.cap, g.vertex_mask(), {}};
    e.expand(0, e.all, 0);
    std::sort(e.out.begin(), e.out.end());
    return e.out;
}

int independence_number(const Graph& g, const MisOptions& opts) {
    int best = 0;
    for (std::uint64_t s : maximal_independent_sets(g, opts))
        best = std::max(best, std::popcount(s));
    return best;
}

bool is_independent_set(const Graph& g, std::uint64_t set) {
    std::uint64_t rest = set;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (g.neighbors(v) & set) return false;
    }
    return true;
}

bool is_maximal_independent_set(const Graph& g, std::uint64_t set) {
    if (!is_independent_set(g, set)) return false;
    std::uint64_t outside = g.vertex_mask() & ~set;
    while (outside) {
        int v = std::countr_zero(outside);
        outside &= outside - 1;
        if ((g.neighbors(v) & set) == 0) return false; // could still be added
    }
    return true;
}

} // namespace fracx
