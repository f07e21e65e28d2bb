#include "fracx/graph.hpp"

#include <bit>
#include <cctype>
#include <sstream>

#include "fracx/errors.hpp"

namespace fracx {

Graph Graph::empty(int n) {
    if (n < 0 || n > kMaxVertices)
        throw InputError("vertex count out of range 0..62: " + std::to_string(n));
    Graph g;
    g.n_ = n;
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g = empty(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge endpoint out of range: " + std::to_string(u) + " " +
                             std::to_string(v));
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        if (g.has_edge(u, v))
            throw InputError("duplicate edge: " + std::to_string(u) + " " + std::to_string(v));
        g.adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        g.adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
        ++g.m_;
    }
    return g;
}

int Graph::degree(int v) const {
    return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

bool Graph::has_edge(int u, int v) const {
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1;
}

std::uint64_t Graph::vertex_mask() const {
    return n_ == 0 ? 0 : (~std::uint64_t{0} >> (64 - n_));
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        std::uint64_t rest = adj_[static_cast<std::size_t>(u)] >> (u + 1) << (u + 1);
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::with_edge(int u, int v) const {
    Graph g = *this;
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v || has_edge(u, v))
        throw InputError("invalid edge addition");
    g.adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    g.adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    ++g.m_;
    return g;
}

Graph Graph::deleting_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || !has_edge(u, v))
        throw InputError("edge not present");
    Graph g = *this;
    g.adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
    g.adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
    --g.m_;
    return g;
}

Graph Graph::deleting_vertex(int v) const {
    if (v < 0 || v >= n_) throw InputError("vertex not present");
    std::vector<std::pair<int, int>> kept;
    for (auto [a, b] : edges()) {
        if (a == v || b == v) continue;
        kept.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    return from_edges(n_ - 1, kept);
}

std::vector<int> set_to_vertices(std::uint64_t set) {
    std::vector<int> out;
    while (set) {
        out.push_back(std::countr_zero(set));
        set &= set - 1;
    }
    return out;
}

std::uint64_t vertices_to_set(const std::vector<int>& vs, int n) {
    std::uint64_t set = 0;
    for (int v : vs) {
        if (v < 0 || v >= n) throw InputError("vertex out of range: " + std::to_string(v));
        set |= std::uint64_t{1} << v;
    }
    return set;
}

namespace {

std::string strip_graph6_decoration(const std::string& text) {
    std::size_t lo = 0, hi = text.size();
    while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
    while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
    std::string s = text.substr(lo, hi - lo);
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    return s;
}

} // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = strip_graph6_decoration(text);
    if (s.empty()) throw InputError("graph6: empty input");
    for (char c : s)
        if (c < 63 || c > 126)
            throw InputError("graph6: character out of printable range 63..126");
    if (s[0] == 126) throw InputError("graph6: vertex count above 62 is not supported");
    int n = s[0] - 63;

    int bits = n * (n - 1) / 2;
    int chars = (bits + 5) / 6;
    if (static_cast<int>(s.size()) != 1 + chars)
        throw InputError("graph6: malformed length (expected " + std::to_string(1 + chars) +
                         " characters, got " + std::to_string(s.size()) + ")");

    std::vector<std::pair<int, int>> es;
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int value = (s[static_cast<std::size_t>(1 + bit / 6)] - 63) >> (5 - bit % 6) & 1;
            if (value) es.emplace_back(i, j);
        }
    }
    for (; bit < 6 * chars; ++bit) {
        if ((s[static_cast<std::size_t>(1 + bit / 6)] - 63) >> (5 - bit % 6) & 1)
            throw InputError("graph6: trailing padding bits are not zero");
    }
    return Graph::from_edges(n, es);
}

std::string encode_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out(1, static_cast<char>(63 + n));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> es;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        if (n < 0) {
            std::string tag;
            if (!(ls >> tag)) continue; // blank line
            int count;
            if (tag != "n" || !(ls >> count))
                throw InputError("edge list: first payload line must be \"n <count>\" (line " +
                                 std::to_string(lineno) + ")");
            std::string extra;
            if (ls >> extra) throw InputError("edge list: junk after vertex count");
            n = count;
            continue;
        }
        int u, v;
        if (!(ls >> u)) continue; // blank line
        if (!(ls >> v)) throw InputError("edge list: incomplete edge on line " + std::to_string(lineno));
        std::string extra;
        if (ls >> extra) throw InputError("edge list: junk after edge on line " + std::to_string(lineno));
        es.emplace_back(u, v);
    }
    if (n < 0) throw InputError("edge list: missing \"n <count>\" line");
    return Graph::from_edges(n, es);
}

namespace {

Graph make_path(int k) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < k; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edges(k, es);
}

Graph make_cycle(int k) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < k; ++i) es.emplace_back(i, (i + 1) % k);
    return Graph::from_edges(k, es);
}

} // namespace

Graph named_graph(const std::string& name) {
    if (name == "k2") return make_path(2);
    if (name == "c5") return make_cycle(5);
    if (name == "k4prime") {
        // 4-cycle 0-1-2-3 plus the two subdivided diagonals 0-4-5-2 and 1-6-7-3.
        return Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                     {0, 4}, {4, 5}, {5, 2},
                                     {1, 6}, {6, 7}, {7, 3}});
    }
    if (name == "petersen") {
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < 5; ++i) {
            es.emplace_back(i, (i + 1) % 5);
            es.emplace_back(i, i + 5);
            es.emplace_back(5 + i, 5 + (i + 2) % 5);
        }
        return Graph::from_edges(10, es);
    }
    if (name == "gp_7_2") {
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < 7; ++i) {
            es.emplace_back(i, (i + 1) % 7);
            es.emplace_back(i, i + 7);
            es.emplace_back(7 + i, 7 + (i + 2) % 7);
        }
        return Graph::from_edges(14, es);
    }

    auto sized = [&](const std::string& prefix, int min_k) -> int {
        if (name.rfind(prefix, 0) != 0) return -1;
        std::string rest = name.substr(prefix.size());
        if (rest.empty()) throw InputError("named graph " + name + ": missing size");
        for (char c : rest)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw InputError("named graph " + name + ": invalid size");
        int k = std::stoi(rest);
        if (k < min_k || k > Graph::kMaxVertices)
            throw InputError("named graph " + name + ": size out of range");
        return k;
    };
    if (int k = sized("path_", 2); k > 0) return make_path(k);
    if (int k = sized("cycle_", 3); k > 0) return make_cycle(k);
    throw InputError("unknown graph name: " + name);
}

} // namespace fracx
