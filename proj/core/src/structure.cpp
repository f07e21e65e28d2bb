#include "fracx/structure.hpp"

#include <algorithm>
#include <bit>

#include "fracx/errors.hpp"
#include "fracx/generate.hpp"

namespace fracx {

std::string to_string(DangerousKind kind) {
    return kind == DangerousKind::C5 ? "C5" : "K4PRIME";
}

namespace {

int induced_edge_count(const Graph& g, std::uint64_t set) {
    int count = 0;
    std::uint64_t rest = set;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        count += std::popcount(g.neighbors(v) & set);
    }
    return count / 2;
}

std::uint64_t degree_two_inside(const Graph& g, std::uint64_t set) {
    std::uint64_t special = 0;
    std::uint64_t rest = set;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (std::popcount(g.neighbors(v) & set) == 2) special |= std::uint64_t{1} << v;
    }
    return special;
}

// Induced 5-cycles by path extension: start at the smallest vertex of the
// cycle, orient so the second vertex is smaller than the last.
void collect_induced_c5(const Graph& g, std::vector<DangerousOccurrence>& out) {
    int n = g.vertex_count();
    std::vector<std::uint64_t> found;
    for (int a = 0; a < n; ++a) {
        std::uint64_t above = g.vertex_mask() & ~((std::uint64_t{2} << a) - 1);
        std::uint64_t nb_a = g.neighbors(a) & above;
        std::uint64_t rest_b = nb_a;
        while (rest_b) {
            int b = std::countr_zero(rest_b);
            rest_b &= rest_b - 1;
            std::uint64_t rest_c = g.neighbors(b) & above & ~(std::uint64_t{1} << b);
            while (rest_c) {
                int c = std::countr_zero(rest_c);
                rest_c &= rest_c - 1;
                if (c == a || g.has_edge(a, c)) continue;
                std::uint64_t rest_d = g.neighbors(c) & above;
                while (rest_d) {
                    int d = std::countr_zero(rest_d);
                    rest_d &= rest_d - 1;
                    if (d == b || g.has_edge(a, d) || g.has_edge(b, d)) continue;
                    // e closes the cycle: adjacent to d and a, nothing else.
                    std::uint64_t rest_e = g.neighbors(d) & g.neighbors(a) & above;
                    while (rest_e) {
                        int e = std::countr_zero(rest_e);
                        rest_e &= rest_e - 1;
                        if (e == b || e == c || e <= b) continue; // b < e fixes orientation
                        if (g.has_edge(b, e) || g.has_edge(c, e)) continue;
                        std::uint64_t set = (std::uint64_t{1} << a) | (std::uint64_t{1} << b) |
                                            (std::uint64_t{1} << c) | (std::uint64_t{1} << d) |
                                            (std::uint64_t{1} << e);
                        found.push_back(set);
                    }
                }
            }
        }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    for (std::uint64_t set : found)
        out.push_back({DangerousKind::C5, set, set});
}

bool induced_is_k4prime(const Graph& g, std::uint64_t set) {
    if (induced_edge_count(g, set) != 10) return false;
    std::vector<int> degs;
    std::uint64_t rest = set;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        degs.push_back(std::popcount(g.neighbors(v) & set));
    }
    std::sort(degs.begin(), degs.end());
    if (degs != std::vector<int>{2, 2, 2, 2, 3, 3, 3, 3}) return false;
    // Definitive check: complete-key comparison of the induced subgraph.
    std::vector<int> vs = set_to_vertices(set);
    std::vector<std::pair<int, int>> es;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j])) es.emplace_back(static_cast<int>(i), static_cast<int>(j));
    static const std::string k4prime_key = canonical_key(named_graph("k4prime"));
    return canonical_key(Graph::from_edges(8, es)) == k4prime_key;
}

void collect_k4prime_bruteforce(const Graph& g, std::vector<DangerousOccurrence>& out) {
    int n = g.vertex_count();
    std::vector<int> cand;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 2) cand.push_back(v);
    if (cand.size() < 8) return;
    std::vector<int> idx(8);
    for (int i = 0; i < 8; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::uint64_t set = 0;
        for (int i : idx) set |= std::uint64_t{1} << cand[static_cast<std::size_t>(i)];
        if (induced_is_k4prime(g, set))
            out.push_back({DangerousKind::K4Prime, set, degree_two_inside(g, set)});
        int pos = 7;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == static_cast<int>(cand.size()) - 8 + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < 8; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
}

// Anchored search for larger graphs: pick a 4-cycle, then a two-vertex
// subdivision path across each diagonal.
void collect_k4prime_anchored(const Graph& g, std::vector<DangerousOccurrence>& out) {
    int n = g.vertex_count();
    std::vector<std::uint64_t> found;
    for (int u = 0; u < n; ++u) {
        std::uint64_t nb_u = g.neighbors(u);
        std::uint64_t rest_v = nb_u;
        while (rest_v) {
            int v = std::countr_zero(rest_v);
            rest_v &= rest_v - 1;
            std::uint64_t rest_y = nb_u & ~((std::uint64_t{2} << v) - 1); // y > v
            while (rest_y) {
                int y = std::countr_zero(rest_y);
                rest_y &= rest_y - 1;
                std::uint64_t rest_x = g.neighbors(v) & g.neighbors(y);
                while (rest_x) {
                    int x = std::countr_zero(rest_x);
                    rest_x &= rest_x - 1;
                    if (x <= u || g.has_edge(u, x) || g.has_edge(v, y)) continue;
                    std::uint64_t cyc = (std::uint64_t{1} << u) | (std::uint64_t{1} << v) |
                                        (std::uint64_t{1} << x) | (std::uint64_t{1} << y);
                    // Diagonal paths u-a-b-x and v-c-d-y.
                    std::uint64_t rest_a = g.neighbors(u) & ~cyc;
                    while (rest_a) {
                        int a = std::countr_zero(rest_a);
                        rest_a &= rest_a - 1;
                        std::uint64_t rest_b = g.neighbors(a) & g.neighbors(x) & ~cyc;
                        while (rest_b) {
                            int b = std::countr_zero(rest_b);
                            rest_b &= rest_b - 1;
                            if (b == a) continue;
                            std::uint64_t half = cyc | (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
                            std::uint64_t rest_c = g.neighbors(v) & ~half;
                            while (rest_c) {
                                int c = std::countr_zero(rest_c);
                                rest_c &= rest_c - 1;
                                std::uint64_t rest_d = g.neighbors(c) & g.neighbors(y) & ~half;
                                while (rest_d) {
                                    int d = std::countr_zero(rest_d);
                                    rest_d &= rest_d - 1;
                                    if (d == c) continue;
                                    std::uint64_t set = half | (std::uint64_t{1} << c) |
                                                        (std::uint64_t{1} << d);
                                    if (induced_edge_count(g, set) == 10) found.push_back(set);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    for (std::uint64_t set : found)
        out.push_back({DangerousKind::K4Prime, set, degree_two_inside(g, set)});
}

} // namespace

std::vector<DangerousOccurrence> find_dangerous_induced(const Graph& g) {
    std::vector<DangerousOccurrence> out;
    collect_induced_c5(g, out);
    std::vector<DangerousOccurrence> quads;
    if (g.vertex_count() <= 20)
        collect_k4prime_bruteforce(g, quads);
    else
        collect_k4prime_anchored(g, quads);
    out.insert(out.end(), quads.begin(), quads.end());
    return out;
}

NailReport is_nail(const Graph& g, std::uint64_t b) {
    if (b & ~g.vertex_mask()) throw InputError("nail candidate contains vertices outside the graph");
    NailReport report;
    std::uint64_t rest = b;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (g.degree(v) >= 3) report.degree_violations.push_back(v);
    }
    for (const DangerousOccurrence& occ : find_dangerous_induced(g)) {
        int safe = 0;
        std::uint64_t special = occ.special;
        while (special) {
            int v = std::countr_zero(special);
            special &= special - 1;
            if ((b >> v & 1) || g.degree(v) == 3) ++safe;
        }
        if (safe < 2) report.bad_occurrences.push_back(occ);
    }
    report.is_nail = report.degree_violations.empty() && report.bad_occurrences.empty();
    return report;
}

DemandFunction fb_demand(const Graph& g, std::uint64_t b) {
    if (b & ~g.vertex_mask()) throw InputError("demand set contains vertices outside the graph");
    int n = g.vertex_count();
    std::vector<Rational> demands(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        int deg = g.degree(v);
        if (deg > 3) throw InputError("demand rule needs a subcubic graph; vertex " +
                                      std::to_string(v) + " has degree " + std::to_string(deg));
        demands[static_cast<std::size_t>(v)] = Rational((b >> v & 1) ? 7 - deg : 8 - deg, 14);
    }
    return DemandFunction(std::move(demands));
}

WeightScores weight_scores(const Graph& g, const std::vector<Rational>& w) {
    int n = g.vertex_count();
    if (static_cast<int>(w.size()) != n)
        throw InputError("weight vector size mismatch");
    WeightScores result;
    result.scores.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        // BFS distances from v.
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        dist[static_cast<std::size_t>(v)] = 0;
        std::vector<int> queue{v};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            std::uint64_t rest = g.neighbors(x);
            while (rest) {
                int y = std::countr_zero(rest);
                rest &= rest - 1;
                if (dist[static_cast<std::size_t>(y)] < 0) {
                    dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                    queue.push_back(y);
                }
            }
        }
        Rational score = Rational(9) * w[static_cast<std::size_t>(v)];
        for (int u = 0; u < n; ++u) {
            if (dist[static_cast<std::size_t>(u)] == 1)
                score -= Rational(5) * w[static_cast<std::size_t>(u)];
            else if (dist[static_cast<std::size_t>(u)] == 2)
                score += w[static_cast<std::size_t>(u)];
        }
        result.scores[static_cast<std::size_t>(v)] = score;
        result.total += score;
        if (!result.argmax || score > result.scores[static_cast<std::size_t>(*result.argmax)])
            result.argmax = v;
    }
    return result;
}

} // namespace fracx
