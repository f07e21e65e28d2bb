#include "fracx/coloring.hpp"

#include <algorithm>
#include <sstream>

#include "fracx/errors.hpp"

namespace fracx {

namespace {

void require_class_shape(const Graph& g, const SetColoring& c) {
    if (static_cast<int>(c.classes.size()) != g.vertex_count())
        throw InputError("coloring has " + std::to_string(c.classes.size()) +
                         " classes for a graph on " + std::to_string(g.vertex_count()) +
                         " vertices");
    if (c.palette_size < 0) throw InputError("negative palette size");
    for (std::size_t v = 0; v < c.classes.size(); ++v) {
        const std::vector<int>& cls = c.classes[v];
        for (std::size_t i = 0; i < cls.size(); ++i) {
            if (cls[i] < 1 || cls[i] > c.palette_size)
                throw InputError("vertex " + std::to_string(v) + " uses color " +
                                 std::to_string(cls[i]) + " outside 1.." +
                                 std::to_string(c.palette_size));
            if (i > 0 && cls[i] <= cls[i - 1])
                throw InputError("vertex " + std::to_string(v) +
                                 " class is not sorted strictly ascending");
        }
    }
}

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// |class| >= N * f(v), compared exactly.
bool size_meets_demand(std::size_t size, int palette, const Rational& demand) {
    return Rational(static_cast<long long>(size)) >= Rational(palette) * demand;
}

} // namespace

VerifyResult verify_set_coloring(const Graph& g, const DemandFunction& f, const SetColoring& c) {
    if (f.size() != g.vertex_count()) throw InputError("demand size mismatch");
    require_class_shape(g, c);

    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!size_meets_demand(c.classes[static_cast<std::size_t>(v)].size(), c.palette_size, f[v])) {
            ColoringViolation viol;
            viol.kind = ColoringViolation::Kind::Size;
            viol.vertex = v;
            return {false, viol};
        }
    }
    for (auto [u, v] : g.edges()) {
        std::vector<int> shared = sorted_intersection(c.classes[static_cast<std::size_t>(u)],
                                                      c.classes[static_cast<std::size_t>(v)]);
        if (!shared.empty()) {
            ColoringViolation viol;
            viol.kind = ColoringViolation::Kind::Conflict;
            viol.edge = {u, v};
            viol.shared_colors = std::move(shared);
            return {false, viol};
        }
    }
    return {true, std::nullopt};
}

SetColoring lp_to_set_coloring(const Graph& g, const DemandFunction& f, const LPSolution& sol) {
    if (f.size() != g.vertex_count()) throw InputError("demand size mismatch");
    if (sol.value > Rational(1))
        throw InputError("cover value " + sol.value.str() + " exceeds 1; no coloring can be built");
    if (auto err = check_lp_solution(g, f, sol))
        throw InputError("cover does not certify the demands: " + *err);

    std::vector<std::pair<std::uint64_t, Rational>> support = sol.support;
    std::sort(support.begin(), support.end());

    std::vector<Rational> denominators = f.values();
    for (const auto& [set, weight] : support) denominators.push_back(weight);
    Rational lcm = common_denominator(denominators);
    constexpr long long kPaletteCap = 1'000'000;
    if (lcm > Rational(kPaletteCap))
        throw ResourceLimitError("common denominator " + lcm.str() + " exceeds the palette cap",
                                 kPaletteCap);
    int palette = static_cast<int>(lcm.numerator().get_si());

    SetColoring c;
    c.palette_size = palette;
    c.classes.resize(static_cast<std::size_t>(g.vertex_count()));
    Rational prefix;
    for (const auto& [set, weight] : support) {
        Rational lo = Rational(palette) * prefix;           // block = [lo+1 .. hi]
        Rational hi = Rational(palette) * (prefix + weight);
        long long first = lo.numerator().get_si() + 1;
        long long last = hi.numerator().get_si();
        for (int v : set_to_vertices(set))
            for (long long color = first; color <= last; ++color)
                c.classes[static_cast<std::size_t>(v)].push_back(static_cast<int>(color));
        prefix += weight;
    }
    return c;
}

SetColoring refine_coloring(const SetColoring& c, int m) {
    if (c.palette_size <= 0) throw InputError("refinement needs a nonempty palette");
    if (m < c.palette_size || m % c.palette_size != 0)
        throw InputError("new palette " + std::to_string(m) + " is not a multiple of " +
                         std::to_string(c.palette_size));
    int factor = m / c.palette_size;
    SetColoring out;
    out.palette_size = m;
    out.classes.resize(c.classes.size());
    for (std::size_t v = 0; v < c.classes.size(); ++v) {
        for (int color : c.classes[v])
            for (int i = 0; i < factor; ++i)
                out.classes[v].push_back((color - 1) * factor + 1 + i);
        std::sort(out.classes[v].begin(), out.classes[v].end());
    }
    return out;
}

namespace {

void require_palette_classes(const std::vector<int>& colors, int palette, const char* label) {
    for (std::size_t i = 0; i < colors.size(); ++i) {
        if (colors[i] < 1 || colors[i] > palette)
            throw InputError(std::string(label) + " class uses a color outside the palette");
        if (i > 0 && colors[i] <= colors[i - 1])
            throw InputError(std::string(label) + " class is not sorted strictly ascending");
    }
}

long long exact_size(const Rational& demand, int palette, const char* what) {
    Rational scaled = Rational(palette) * demand;
    if (!scaled.is_integer())
        throw InputError(std::string(what) + ": " + std::to_string(palette) +
                         " is not a common denominator");
    return scaled.numerator().get_si();
}

} // namespace

std::optional<std::vector<int>> extend_path_p3(const std::vector<int>& a_colors,
                                               const std::vector<int>& c_colors,
                                               const DemandFunction& f3, int palette_size) {
    if (f3.size() != 3) throw InputError("path x-y-z needs exactly three demands");
    if (f3[0] + f3[1] > Rational(1) || f3[1] + f3[2] > Rational(1))
        throw InputError("adjacent demands exceed 1 on the path");
    require_palette_classes(a_colors, palette_size, "endpoint");
    require_palette_classes(c_colors, palette_size, "endpoint");
    if (!size_meets_demand(a_colors.size(), palette_size, f3[0]) ||
        !size_meets_demand(c_colors.size(), palette_size, f3[2]))
        throw InputError("endpoint class smaller than its demand");

    long long need = ceil_of(Rational(palette_size) * f3[1]).get_si();
    std::vector<int> used;
    std::set_union(a_colors.begin(), a_colors.end(), c_colors.begin(), c_colors.end(),
                   std::back_inserter(used));
    std::vector<int> middle;
    for (int color = 1; color <= palette_size && static_cast<long long>(middle.size()) < need; ++color)
        if (!std::binary_search(used.begin(), used.end(), color)) middle.push_back(color);
    if (static_cast<long long>(middle.size()) < need) return std::nullopt;
    return middle;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> extend_path_p4(
    const std::vector<int>& a_colors, const std::vector<int>& d_colors, const DemandFunction& f4,
    int palette_size) {
    if (f4.size() != 4) throw InputError("path x-v-y-z needs exactly four demands");
    for (int i = 0; i + 1 < 4; ++i)
        if (f4[i] + f4[i + 1] > Rational(1))
            throw InputError("adjacent demands exceed 1 on the path");
    require_palette_classes(a_colors, palette_size, "endpoint");
    require_palette_classes(d_colors, palette_size, "endpoint");
    if (!size_meets_demand(a_colors.size(), palette_size, f4[0]) ||
        !size_meets_demand(d_colors.size(), palette_size, f4[3]))
        throw InputError("endpoint class smaller than its demand");

    long long p = ceil_of(Rational(palette_size) * f4[1]).get_si(); // class for v, avoids a
    long long q = ceil_of(Rational(palette_size) * f4[2]).get_si(); // class for y, avoids d

    std::vector<bool> in_a(static_cast<std::size_t>(palette_size + 1), false);
    std::vector<bool> in_d(static_cast<std::size_t>(palette_size + 1), false);
    for (int c : a_colors) in_a[static_cast<std::size_t>(c)] = true;
    for (int c : d_colors) in_d[static_cast<std::size_t>(c)] = true;

    // Feasibility of a prefix choice for v's class: the rest of the class
    // prefers colors already blocked for y (inside d), then shared room.
    auto completable = [&](const std::vector<bool>& chosen, long long chosen_count,
                           int next_color) -> bool {
        long long remaining = p - chosen_count;
        long long pool_in_d = 0, pool_shared = 0;
        for (int c = next_color; c <= palette_size; ++c) {
            if (in_a[static_cast<std::size_t>(c)] || chosen[static_cast<std::size_t>(c)]) continue;
            (in_d[static_cast<std::size_t>(c)] ? pool_in_d : pool_shared)++;
        }
        if (pool_in_d + pool_shared < remaining) return false;
        long long chosen_shared = 0;
        for (int c = 1; c <= palette_size; ++c)
            if (chosen[static_cast<std::size_t>(c)] && !in_d[static_cast<std::size_t>(c)]) ++chosen_shared;
        long long extra_shared = std::max<long long>(0, remaining - pool_in_d);
        long long room_for_y = 0;
        for (int c = 1; c <= palette_size; ++c)
            if (!in_d[static_cast<std::size_t>(c)]) ++room_for_y;
        return room_for_y - chosen_shared - extra_shared >= q;
    };

    std::vector<bool> chosen(static_cast<std::size_t>(palette_size + 1), false);
    long long count = 0;
    if (!completable(chosen, 0, 1)) return std::nullopt;
    // Lexicographically least class for v that still leaves room for y.
    for (int c = 1; c <= palette_size && count < p; ++c) {
        if (in_a[static_cast<std::size_t>(c)]) continue;
        chosen[static_cast<std::size_t>(c)] = true;
        if (completable(chosen, count + 1, c + 1)) {
            ++count;
        } else {
            chosen[static_cast<std::size_t>(c)] = false;
        }
    }
    if (count < p) return std::nullopt;

    std::vector<int> v_class, y_class;
    for (int c = 1; c <= palette_size; ++c)
        if (chosen[static_cast<std::size_t>(c)]) v_class.push_back(c);
    for (int c = 1; c <= palette_size && static_cast<long long>(y_class.size()) < q; ++c)
        if (!in_d[static_cast<std::size_t>(c)] && !chosen[static_cast<std::size_t>(c)]) y_class.push_back(c);
    if (static_cast<long long>(y_class.size()) < q) return std::nullopt;
    return std::make_pair(std::move(v_class), std::move(y_class));
}

SetColoring parse_set_coloring(const std::string& text, int n_vertices) {
    std::istringstream in(text);
    std::string line;
    int palette = -1;
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(n_vertices));
    std::vector<bool> seen(static_cast<std::size_t>(n_vertices), false);
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::string trimmed;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) trimmed.push_back(ch);
        if (trimmed.empty()) continue;
        if (palette < 0) {
            if (trimmed.rfind("N=", 0) != 0)
                throw InputError("coloring: first payload line must be \"N=<int>\"");
            palette = std::stoi(trimmed.substr(2));
            if (palette < 0) throw InputError("coloring: negative palette size");
            continue;
        }
        auto colon = trimmed.find(':');
        if (colon == std::string::npos)
            throw InputError("coloring: missing ':' on line " + std::to_string(lineno));
        int v = std::stoi(trimmed.substr(0, colon));
        if (v < 0 || v >= n_vertices)
            throw InputError("coloring: vertex out of range on line " + std::to_string(lineno));
        if (seen[static_cast<std::size_t>(v)])
            throw InputError("coloring: duplicate vertex " + std::to_string(v));
        seen[static_cast<std::size_t>(v)] = true;
        std::string rest = trimmed.substr(colon + 1);
        std::vector<int> colors;
        std::istringstream cs(rest);
        std::string token;
        while (std::getline(cs, token, ',')) {
            if (token.empty()) continue;
            colors.push_back(std::stoi(token));
        }
        std::sort(colors.begin(), colors.end());
        if (std::adjacent_find(colors.begin(), colors.end()) != colors.end())
            throw InputError("coloring: duplicate color for vertex " + std::to_string(v));
        classes[static_cast<std::size_t>(v)] = std::move(colors);
    }
    if (palette < 0) throw InputError("coloring: missing \"N=<int>\" header");
    SetColoring c;
    c.palette_size = palette;
    c.classes = std::move(classes);
    return c;
}

std::string format_set_coloring(const SetColoring& c) {
    std::ostringstream out;
    out << "N=" << c.palette_size << "\n";
    for (std::size_t v = 0; v < c.classes.size(); ++v) {
        out << v << ":";
        for (std::size_t i = 0; i < c.classes[v].size(); ++i)
            out << (i ? "," : " ") << c.classes[v][i];
        out << "\n";
    }
    return out.str();
}

} // namespace fracx
