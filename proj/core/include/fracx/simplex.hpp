#ifndef FRACX_SIMPLEX_HPP
#define FRACX_SIMPLEX_HPP

#include <vector>

#include "fracx/rational.hpp"

namespace fracx {

enum class Relation { LessEq, Equal, GreaterEq };

struct Constraint {
    std::vector<Rational> coeffs;
    Relation rel = Relation::LessEq;
    Rational rhs;
};

enum class SolveStatus { Optimal, Infeasible, Unbounded };

struct SimplexResult {
    SolveStatus status = SolveStatus::Infeasible;
    Rational value;                // optimal objective (when Optimal)
    std::vector<Rational> x;       // optimal basic solution
    std::vector<Rational> duals;   // one multiplier per constraint; for a
                                   // minimization, >= rows get y >= 0 and
                                   // <= rows get y <= 0
};

/// Minimizes objective . x subject to the constraints and x >= 0, in exact
/// rational arithmetic.  Two-phase tableau simplex with Bland's rule, so
/// the pivot sequence is deterministic and terminating.  Duals are the
/// multipliers of the final basis (skipped when want_duals is false).
SimplexResult simplex_min(const std::vector<Rational>& objective,
                          const std::vector<Constraint>& constraints,
                          bool want_duals = true);

} // namespace fracx

#endif
