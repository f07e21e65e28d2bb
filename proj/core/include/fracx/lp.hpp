#ifndef FRACX_LP_HPP
#define FRACX_LP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fracx/demand.hpp"
#include "fracx/graph.hpp"
#include "fracx/mis.hpp"
#include "fracx/rational.hpp"

namespace fracx {

/// Optimal fractional cover: positive weights on maximal independent sets,
/// listed in enumeration order (ascending set mask).
struct LPSolution {
    Rational value;
    std::vector<std::pair<std::uint64_t, Rational>> support;
};

/// Nonnegative vertex weights y with sum at most 1 on every maximal
/// independent set; value is sum f(v) y(v).
struct DualWitness {
    Rational value;
    std::vector<Rational> y;
};

struct LpOptions {
    MisOptions mis;
};

/// Minimum total weight of maximal independent sets covering each vertex v
/// with weight at least f(v).
LPSolution fracc_value(const Graph& g, const DemandFunction& f, const LpOptions& opts = {});

/// Maximum of sum f(v) y(v) over feasible dual weights; solved directly, so
/// it cross-checks the primal value exactly.
DualWitness fracd_witness(const Graph& g, const DemandFunction& f, const LpOptions& opts = {});

struct ChiFResult {
    Rational value;
    LPSolution primal;
    DualWitness dual;
};

/// Exact fractional chromatic number with both certificates (1 for edgeless
/// graphs).  Requires n >= 1.
ChiFResult chi_f(const Graph& g, const LpOptions& opts = {});

enum class Feasibility { Feasible, Infeasible };

struct FeasibilityResult {
    Feasibility verdict = Feasibility::Infeasible;
    std::optional<LPSolution> primal;   // cover of value <= 1, when feasible
    std::optional<DualWitness> witness; // dual of value > 1, when infeasible
};

/// Whether the demands admit a fractional coloring (cover value <= 1).
FeasibilityResult f_coloring_feasible(const Graph& g, const DemandFunction& f,
                                      const LpOptions& opts = {});

/// Certificate re-checks, independent of the solver path.  Return an error
/// description, or nullopt when the certificate is valid.
std::optional<std::string> check_lp_solution(const Graph& g, const DemandFunction& f,
                                             const LPSolution& sol);
std::optional<std::string> check_dual_witness(const Graph& g, const DemandFunction& f,
                                              const DualWitness& w,
                                              const LpOptions& opts = {});

} // namespace fracx

#endif
