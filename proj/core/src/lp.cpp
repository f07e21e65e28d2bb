#include "fracx/lp.hpp"

#include <bit>
#include <stdexcept>

#include "fracx/errors.hpp"
#include "fracx/simplex.hpp"

namespace fracx {

namespace {

void require_matching_size(const Graph& g, const DemandFunction& f) {
    if (f.size() != g.vertex_count())
        throw InputError("demand function size does not match the graph");
}

} // namespace

LPSolution fracc_value(const Graph& g, const DemandFunction& f, const LpOptions& opts) {
    require_matching_size(g, f);
    std::vector<std::uint64_t> sets = maximal_independent_sets(g, opts.mis);
    int n = g.vertex_count();
    int k = static_cast<int>(sets.size());

    std::vector<Rational> objective(static_cast<std::size_t>(k), Rational(1));
    std::vector<Constraint> rows(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        Constraint& c = rows[static_cast<std::size_t>(v)];
        c.coeffs.assign(static_cast<std::size_t>(k), Rational(0));
        for (int j = 0; j < k; ++j)
            if (sets[static_cast<std::size_t>(j)] >> v & 1) c.coeffs[static_cast<std::size_t>(j)] = Rational(1);
        c.rel = Relation::GreaterEq;
        c.rhs = f[v];
    }

    SimplexResult r = simplex_min(objective, rows, /*want_duals=*/false);
    if (r.status != SolveStatus::Optimal)
        throw std::logic_error("covering program must be feasible and bounded");

    LPSolution sol;
    sol.value = r.value;
    for (int j = 0; j < k; ++j)
        if (r.x[static_cast<std::size_t>(j)] > Rational(0))
            sol.support.emplace_back(sets[static_cast<std::size_t>(j)], r.x[static_cast<std::size_t>(j)]);
    return sol;
}

DualWitness fracd_witness(const Graph& g, const DemandFunction& f, const LpOptions& opts) {
    require_matching_size(g, f);
    std::vector<std::uint64_t> sets = maximal_independent_sets(g, opts.mis);
    int n = g.vertex_count();

    std::vector<Rational> objective(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) objective[static_cast<std::size_t>(v)] = -f[v];
    std::vector<Constraint> rows(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        Constraint& c = rows[i];
        c.coeffs.assign(static_cast<std::size_t>(n), Rational(0));
        for (int v = 0; v < n; ++v)
            if (sets[i] >> v & 1) c.coeffs[static_cast<std::size_t>(v)] = Rational(1);
        c.rel = Relation::LessEq;
        c.rhs = Rational(1);
    }

    SimplexResult r = simplex_min(objective, rows, /*want_duals=*/false);
    if (r.status != SolveStatus::Optimal)
        throw std::logic_error("dual program must be feasible and bounded");

    DualWitness w;
    w.value = -r.value;
    w.y = std::move(r.x);
    return w;
}

ChiFResult chi_f(const Graph& g, const LpOptions& opts) {
    if (g.vertex_count() < 1) throw InputError("fractional chromatic number needs n >= 1");
    DemandFunction ones = DemandFunction::uniform(g.vertex_count(), Rational(1));
    ChiFResult result;
    result.primal = fracc_value(g, ones, opts);
    result.dual = fracd_witness(g, ones, opts);
    if (result.primal.value != result.dual.value)
        throw std::logic_error("primal and dual optima disagree");
    result.value = result.primal.value;
    return result;
}

FeasibilityResult f_coloring_feasible(const Graph& g, const DemandFunction& f,
                                      const LpOptions& opts) {
    FeasibilityResult result;
    LPSolution primal = fracc_value(g, f, opts);
    if (primal.value <= Rational(1)) {
        result.verdict = Feasibility::Feasible;
        result.primal = std::move(primal);
        return result;
    }
    DualWitness witness = fracd_witness(g, f, opts);
    if (witness.value != primal.value)
        throw std::logic_error("primal and dual optima disagree");
    result.verdict = Feasibility::Infeasible;
    result.witness = std::move(witness);
    return result;
}

std::optional<std::string> check_lp_solution(const Graph& g, const DemandFunction& f,
                                             const LPSolution& sol) {
    if (f.size() != g.vertex_count()) return "demand size mismatch";
    Rational total;
    std::vector<Rational> coverage(static_cast<std::size_t>(g.vertex_count()), Rational(0));
    for (const auto& [set, weight] : sol.support) {
        if (!(weight > Rational(0))) return "support weight is not positive";
        if (set & ~g.vertex_mask()) return "support set contains foreign vertices";
        if (!is_maximal_independent_set(g, set)) return "support set is not a maximal independent set";
        total += weight;
        std::uint64_t rest = set;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            coverage[static_cast<std::size_t>(v)] += weight;
        }
    }
    if (total != sol.value) return "value differs from the sum of support weights";
    for (int v = 0; v < g.vertex_count(); ++v)
        if (coverage[static_cast<std::size_t>(v)] < f[v])
            return "vertex " + std::to_string(v) + " is covered below its demand";
    return std::nullopt;
}

std::optional<std::string> check_dual_witness(const Graph& g, const DemandFunction& f,
                                              const DualWitness& w, const LpOptions& opts) {
    if (f.size() != g.vertex_count()) return "demand size mismatch";
    if (static_cast<int>(w.y.size()) != g.vertex_count()) return "weight vector size mismatch";
    Rational value;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (w.y[static_cast<std::size_t>(v)] < Rational(0)) return "negative weight at vertex " + std::to_string(v);
        value += f[v] * w.y[static_cast<std::size_t>(v)];
    }
    if (value != w.value) return "value differs from the weighted demand sum";
    for (std::uint64_t set : maximal_independent_sets(g, opts.mis)) {
        Rational sum;
        std::uint64_t rest = set;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            sum += w.y[static_cast<std::size_t>(v)];
        }
        if (sum > Rational(1)) return "an independent set carries weight above 1";
    }
    return std::nullopt;
}

} // namespace fracx
