#include "fracx/generate.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "fracx/errors.hpp"
#include "fracx/structural.hpp"

namespace fracx {

namespace {

constexpr int kExhaustiveLimit = 10;

// Iterated neighborhood color refinement.  Colors are dense ids assigned in
// sorted signature order, so they are isomorphism-invariant.
std::vector<int> refined_colors(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sigs(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{color[static_cast<std::size_t>(v)]};
            std::uint64_t rest = g.neighbors(v);
            while (rest) {
                int u = std::countr_zero(rest);
                rest &= rest - 1;
                s.push_back(color[static_cast<std::size_t>(u)]);
            }
            std::sort(s.begin() + 1, s.end());
            sigs[static_cast<std::size_t>(v)] = {std::move(s), v};
        }
        std::vector<std::pair<std::vector<int>, int>> sorted = sigs;
        std::sort(sorted.begin(), sorted.end());
        std::map<std::vector<int>, int> dense;
        for (const auto& [sig, v] : sorted)
            dense.emplace(sig, static_cast<int>(dense.size()));
        std::vector<int> next(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            next[static_cast<std::size_t>(v)] = dense[sigs[static_cast<std::size_t>(v)].first];
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

// Sorted BFS distance profile per vertex (unreachable encoded as n).
std::vector<int> distance_profile(const Graph& g, int from) {
    int n = g.vertex_count();
    std::vector<int> dist(static_cast<std::size_t>(n), n);
    dist[static_cast<std::size_t>(from)] = 0;
    std::vector<int> queue{from};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        std::uint64_t rest = g.neighbors(x);
        while (rest) {
            int y = std::countr_zero(rest);
            rest &= rest - 1;
            if (dist[static_cast<std::size_t>(y)] == n && y != from) {
                dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                queue.push_back(y);
            }
        }
    }
    std::sort(dist.begin(), dist.end());
    return dist;
}

void append_int(std::string& out, int value) {
    out.push_back(static_cast<char>(value & 0xff));
    out.push_back(static_cast<char>(value >> 8 & 0xff));
}

// Minimum adjacency string over all vertex orders that respect the refined
// color partition, by branch and bound.  Column k holds the adjacency bits
// of position k toward positions 0..k-1 (earlier position = higher bit).
struct CanonSearch {
    const Graph& g;
    std::vector<std::vector<int>> cells; // vertices grouped by refined color
    std::vector<int> cell_of_position;
    std::vector<int> perm;
    std::uint64_t used = 0;
    std::vector<std::uint64_t> best;
    bool have_best = false;

    explicit CanonSearch(const Graph& graph, const std::vector<int>& color) : g(graph) {
        int n = g.vertex_count();
        int classes = n == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
        cells.resize(static_cast<std::size_t>(classes));
        for (int v = 0; v < n; ++v) cells[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])].push_back(v);
        for (int c = 0; c < classes; ++c)
            for (std::size_t i = 0; i < cells[static_cast<std::size_t>(c)].size(); ++i)
                cell_of_position.push_back(c);
        perm.assign(static_cast<std::size_t>(n), -1);
        best.assign(static_cast<std::size_t>(n), 0);
    }

    std::uint64_t column(int candidate, int k) const {
        std::uint64_t col = 0;
        for (int i = 0; i < k; ++i)
            col = col << 1 | (g.has_edge(candidate, perm[static_cast<std::size_t>(i)]) ? 1 : 0);
        return col;
    }

    void dfs(int k, std::vector<std::uint64_t>& cols, bool tied) {
        int n = g.vertex_count();
        if (k == n) {
            if (!have_best || cols < best) {
                best = cols;
                have_best = true;
            }
            return;
        }
        const std::vector<int>& cell = cells[static_cast<std::size_t>(cell_of_position[static_cast<std::size_t>(k)])];
        // Swapping two unplaced vertices with identical neighborhoods is an
        // automorphism, so one representative per neighborhood suffices.
        std::vector<std::pair<std::uint64_t, int>> cands;
        std::vector<std::uint64_t> seen_adj;
        for (int v : cell) {
            if (used >> v & 1) continue;
            std::uint64_t sig = g.neighbors(v);
            if (std::find(seen_adj.begin(), seen_adj.end(), sig) != seen_adj.end()) continue;
            seen_adj.push_back(sig);
            cands.emplace_back(column(v, k), v);
        }
        std::sort(cands.begin(), cands.end());
        for (auto [col, v] : cands) {
            bool next_tied = tied;
            if (have_best && tied) {
                if (col > best[static_cast<std::size_t>(k)]) break; // sorted: the rest only grows
                if (col < best[static_cast<std::size_t>(k)]) next_tied = false;
            }
            perm[static_cast<std::size_t>(k)] = v;
            used |= std::uint64_t{1} << v;
            cols[static_cast<std::size_t>(k)] = col;
            dfs(k + 1, cols, have_best ? next_tied : true);
            used &= ~(std::uint64_t{1} << v);
            perm[static_cast<std::size_t>(k)] = -1;
        }
    }

    std::vector<std::uint64_t> run() {
        std::vector<std::uint64_t> cols(static_cast<std::size_t>(g.vertex_count()), 0);
        dfs(0, cols, true);
        return best;
    }
};

} // namespace

std::string canonical_key(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color = refined_colors(g);

    std::string key;
    append_int(key, n);
    append_int(key, g.edge_count());

    if (n <= kExhaustiveLimit) {
        key.push_back('X');
        std::vector<int> profile = color;
        std::sort(profile.begin(), profile.end());
        for (int c : profile) append_int(key, c);
        CanonSearch search(g, color);
        for (std::uint64_t col : search.run()) {
            for (int shift = 0; shift < 16; ++shift)
                key.push_back(static_cast<char>(col >> (8 * shift) & 0xff));
        }
        return key;
    }

    key.push_back('R');
    std::vector<std::vector<int>> tokens;
    for (int v = 0; v < n; ++v) {
        std::vector<int> t{color[static_cast<std::size_t>(v)]};
        std::vector<int> d = distance_profile(g, v);
        t.insert(t.end(), d.begin(), d.end());
        tokens.push_back(std::move(t));
    }
    std::sort(tokens.begin(), tokens.end());
    for (const auto& t : tokens)
        for (int x : t) append_int(key, x);
    return key;
}

namespace {

bool edge_allowed(const Graph& g, int u, int v) {
    return !g.has_edge(u, v) && g.degree(u) < 3 && g.degree(v) < 3 &&
           (g.neighbors(u) & g.neighbors(v)) == 0;
}

} // namespace

std::vector<Graph> enumerate_subcubic_trianglefree(int n) {
    if (n < 1 || n > kExhaustiveLimit)
        throw InputError("enumeration supports 1 <= n <= 10, got " + std::to_string(n));

    // Breadth-first over edge counts: every subcubic triangle-free graph
    // stays in the class under edge deletion, so one-edge extensions of the
    // class representatives reach everything.
    std::vector<Graph> connected;
    std::vector<Graph> level{Graph::empty(n)};
    if (n == 1) connected.push_back(level.front());
    while (!level.empty()) {
        std::map<std::string, Graph> next;
        for (const Graph& g : level) {
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (!edge_allowed(g, u, v)) continue;
                    Graph h = g.with_edge(u, v);
                    next.emplace(canonical_key(h), h);
                }
            }
        }
        level.clear();
        for (auto& [key, h] : next) {
            if (is_connected(h)) connected.push_back(h);
            level.push_back(h);
        }
    }
    return connected;
}

namespace {

// splitmix64: tiny, fully specified, identical everywhere.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }
};

std::optional<Graph> sample_once(int n, std::uint64_t seed) {
    SplitMix64 rng{seed};
    Graph g = Graph::empty(n);
    int target = n - 1 + (n > 1 ? rng.below(n / 2 + 2) : 0);
    int attempts = 6 * n * n + 32;
    for (int t = 0; t < attempts && g.edge_count() < std::min(target, 3 * n / 2); ++t) {
        int u = rng.below(n);
        int v = rng.below(n);
        if (u == v || !edge_allowed(g, u, v)) continue;
        g = g.with_edge(u, v);
    }

    // Repair: a cross-component edge can never close a triangle, so only
    // free degrees matter.
    while (true) {
        int n_now = g.vertex_count();
        std::vector<int> comp(static_cast<std::size_t>(n_now), -1);
        int ncomp = 0;
        for (int s = 0; s < n_now; ++s) {
            if (comp[static_cast<std::size_t>(s)] >= 0) continue;
            std::vector<int> stack{s};
            comp[static_cast<std::size_t>(s)] = ncomp;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                std::uint64_t rest = g.neighbors(x);
                while (rest) {
                    int y = std::countr_zero(rest);
                    rest &= rest - 1;
                    if (comp[static_cast<std::size_t>(y)] < 0) {
                        comp[static_cast<std::size_t>(y)] = ncomp;
                        stack.push_back(y);
                    }
                }
            }
            ++ncomp;
        }
        if (ncomp <= 1) return g;
        int a = -1, b = -1;
        for (int v = 0; v < n_now && b < 0; ++v) {
            if (g.degree(v) >= 3) continue;
            if (a < 0) {
                a = v;
            } else if (comp[static_cast<std::size_t>(v)] != comp[static_cast<std::size_t>(a)]) {
                b = v;
            }
        }
        if (b < 0) return std::nullopt; // some component is saturated
        g = g.with_edge(a, b);
    }
}

} // namespace

Graph random_subcubic_trianglefree(int n, std::uint64_t seed) {
    if (n < 1 || n > Graph::kMaxVertices)
        throw InputError("sampler supports 1 <= n <= 62, got " + std::to_string(n));
    for (std::uint64_t salt = 0; salt < 8; ++salt) {
        if (auto g = sample_once(n, seed + salt * 0x6a09e667f3bcc909ULL)) return *g;
    }
    std::vector<std::pair<int, int>> path;
    for (int i = 0; i + 1 < n; ++i) path.emplace_back(i, i + 1);
    return Graph::from_edges(n, path);
}

} // namespace fracx
