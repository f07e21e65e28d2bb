#include "fracx/simplex.hpp"

#include <vector>

#include "fracx/errors.hpp"

namespace fracx {

namespace {

// Column roles.  Markers form an identity block appended to the tableau:
// artificials start in the basis and may pivot out during phase 1; pure
// markers exist only so the final reduced costs expose the dual multipliers.
enum class ColKind { Structural, Slack, Artificial, MarkerOnly };

struct Tableau {
    int rows;
    int cols; // excluding the rhs cell
    std::vector<std::vector<Rational>> a; // rows x (cols + 1); last cell = rhs
    std::vector<Rational> cost1;          // phase-1 reduced costs, size cols + 1
    std::vector<Rational> cost2;          // phase-2 reduced costs, size cols + 1
    std::vector<int> basis;               // basic column per row
    std::vector<ColKind> kind;

    void pivot(int r, int s) {
        std::vector<Rational>& row = a[static_cast<std::size_t>(r)];
        Rational inv = Rational(1) / row[static_cast<std::size_t>(s)];
        for (auto& cell : row) cell *= inv;
        auto eliminate = [&](std::vector<Rational>& other) {
            Rational factor = other[static_cast<std::size_t>(s)];
            if (factor.is_zero()) return;
            for (int j = 0; j <= cols; ++j)
                other[static_cast<std::size_t>(j)] -= factor * row[static_cast<std::size_t>(j)];
        };
        for (int i = 0; i < rows; ++i)
            if (i != r) eliminate(a[static_cast<std::size_t>(i)]);
        eliminate(cost1);
        eliminate(cost2);
        basis[static_cast<std::size_t>(r)] = s;
    }

    // One Bland iteration on the given cost row; entering candidates are
    // limited by `eligible`.  Returns false at optimality; throws on an
    // unbounded ray via the flag.
    template <typename Eligible>
    bool step(std::vector<Rational>& cost, Eligible eligible, bool* unbounded) {
        int enter = -1;
        for (int j = 0; j < cols; ++j) {
            if (!eligible(j)) continue;
            if (cost[static_cast<std::size_t>(j)] < Rational(0)) {
                enter = j;
                break; // Bland: smallest eligible index
            }
        }
        if (enter < 0) return false;
        int leave = -1;
        Rational best_ratio;
        for (int i = 0; i < rows; ++i) {
            const Rational& pivot_cell = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
            if (pivot_cell <= Rational(0)) continue;
            Rational ratio = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols)] / pivot_cell;
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) {
            *unbounded = true;
            return false;
        }
        pivot(leave, enter);
        return true;
    }
};

} // namespace

SimplexResult simplex_min(const std::vector<Rational>& objective,
                          const std::vector<Constraint>& constraints,
                          bool want_duals) {
    const int n = static_cast<int>(objective.size());
    const int m = static_cast<int>(constraints.size());
    for (const Constraint& c : constraints)
        if (static_cast<int>(c.coeffs.size()) != n)
            throw InputError("constraint arity does not match the objective");

    // Normalize to nonnegative rhs, remembering flipped rows for the duals.
    std::vector<int> flip(static_cast<std::size_t>(m), 1);
    std::vector<Relation> rel(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        rel[static_cast<std::size_t>(i)] = constraints[static_cast<std::size_t>(i)].rel;
        if (constraints[static_cast<std::size_t>(i)].rhs < Rational(0)) {
            flip[static_cast<std::size_t>(i)] = -1;
            if (rel[static_cast<std::size_t>(i)] == Relation::LessEq)
                rel[static_cast<std::size_t>(i)] = Relation::GreaterEq;
            else if (rel[static_cast<std::size_t>(i)] == Relation::GreaterEq)
                rel[static_cast<std::size_t>(i)] = Relation::LessEq;
        }
    }

    // Columns: structural, then one slack per inequality, then the marker
    // block (one per row when duals are wanted, otherwise only where an
    // artificial is required).
    std::vector<int> slack_col(static_cast<std::size_t>(m), -1);
    std::vector<int> marker_col(static_cast<std::size_t>(m), -1);
    int cols = n;
    for (int i = 0; i < m; ++i)
        if (rel[static_cast<std::size_t>(i)] != Relation::Equal) slack_col[static_cast<std::size_t>(i)] = cols++;
    for (int i = 0; i < m; ++i) {
        bool needs_artificial = rel[static_cast<std::size_t>(i)] != Relation::LessEq;
        if (needs_artificial || want_duals) marker_col[static_cast<std::size_t>(i)] = cols++;
    }

    Tableau t;
    t.rows = m;
    t.cols = cols;
    t.a.assign(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(cols + 1)));
    t.cost1.assign(static_cast<std::size_t>(cols + 1), Rational(0));
    t.cost2.assign(static_cast<std::size_t>(cols + 1), Rational(0));
    t.basis.assign(static_cast<std::size_t>(m), -1);
    t.kind.assign(static_cast<std::size_t>(cols), ColKind::Structural);

    for (int i = 0; i < m; ++i) {
        const Constraint& c = constraints[static_cast<std::size_t>(i)];
        std::vector<Rational>& row = t.a[static_cast<std::size_t>(i)];
        Rational sign(flip[static_cast<std::size_t>(i)]);
        for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = sign * c.coeffs[static_cast<std::size_t>(j)];
        row[static_cast<std::size_t>(cols)] = sign * c.rhs;
        if (slack_col[static_cast<std::size_t>(i)] >= 0) {
            t.kind[static_cast<std::size_t>(slack_col[static_cast<std::size_t>(i)])] = ColKind::Slack;
            row[static_cast<std::size_t>(slack_col[static_cast<std::size_t>(i)])] =
                Rational(rel[static_cast<std::size_t>(i)] == Relation::LessEq ? 1 : -1);
        }
        if (marker_col[static_cast<std::size_t>(i)] >= 0) {
            bool artificial = rel[static_cast<std::size_t>(i)] != Relation::LessEq;
            t.kind[static_cast<std::size_t>(marker_col[static_cast<std::size_t>(i)])] =
                artificial ? ColKind::Artificial : ColKind::MarkerOnly;
            row[static_cast<std::size_t>(marker_col[static_cast<std::size_t>(i)])] = Rational(1);
        }
        t.basis[static_cast<std::size_t>(i)] =
            rel[static_cast<std::size_t>(i)] == Relation::LessEq ? slack_col[static_cast<std::size_t>(i)]
                                                                 : marker_col[static_cast<std::size_t>(i)];
    }

    for (int j = 0; j < n; ++j) t.cost2[static_cast<std::size_t>(j)] = objective[static_cast<std::size_t>(j)];

    // Phase 1: minimize the sum of artificials.  Initialize the reduced
    // cost row against the starting basis.
    bool any_artificial = false;
    for (int j = 0; j < cols; ++j)
        if (t.kind[static_cast<std::size_t>(j)] == ColKind::Artificial) {
            t.cost1[static_cast<std::size_t>(j)] = Rational(1);
            any_artificial = true;
        }
    for (int i = 0; i < m; ++i) {
        int b = t.basis[static_cast<std::size_t>(i)];
        if (t.kind[static_cast<std::size_t>(b)] == ColKind::Artificial) {
            for (int j = 0; j <= cols; ++j)
                t.cost1[static_cast<std::size_t>(j)] -= t.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }

    SimplexResult result;
    bool unbounded = false;
    if (any_artificial) {
        auto eligible1 = [&](int j) { return t.kind[static_cast<std::size_t>(j)] != ColKind::MarkerOnly; };
        while (t.step(t.cost1, eligible1, &unbounded)) {
        }
        // Phase-1 objective is -cost1[rhs]; positive means infeasible.
        if (-t.cost1[static_cast<std::size_t>(cols)] > Rational(0)) {
            result.status = SolveStatus::Infeasible;
            return result;
        }
        // Drive leftover artificials out of the basis where the row allows;
        // an all-zero row is redundant and its artificial stays pinned at 0.
        for (int i = 0; i < m; ++i) {
            int b = t.basis[static_cast<std::size_t>(i)];
            if (t.kind[static_cast<std::size_t>(b)] != ColKind::Artificial) continue;
            for (int j = 0; j < cols; ++j) {
                if (t.kind[static_cast<std::size_t>(j)] == ColKind::Artificial ||
                    t.kind[static_cast<std::size_t>(j)] == ColKind::MarkerOnly)
                    continue;
                if (!t.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_zero()) {
                    t.pivot(i, j);
                    break;
                }
            }
        }
    }

    // Phase 2 over structural and slack columns only.
    auto eligible2 = [&](int j) {
        return t.kind[static_cast<std::size_t>(j)] == ColKind::Structural ||
               t.kind[static_cast<std::size_t>(j)] == ColKind::Slack;
    };
    unbounded = false;
    while (t.step(t.cost2, eligible2, &unbounded)) {
    }
    if (unbounded) {
        result.status = SolveStatus::Unbounded;
        return result;
    }

    result.status = SolveStatus::Optimal;
    result.value = -t.cost2[static_cast<std::size_t>(cols)];
    result.x.assign(static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i < m; ++i) {
        int b = t.basis[static_cast<std::size_t>(i)];
        if (b < n) result.x[static_cast<std::size_t>(b)] = t.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t.cols)];
    }
    if (want_duals) {
        result.duals.assign(static_cast<std::size_t>(m), Rational(0));
        for (int i = 0; i < m; ++i) {
            int mc = marker_col[static_cast<std::size_t>(i)];
            Rational y = -t.cost2[static_cast<std::size_t>(mc)];
            result.duals[static_cast<std::size_t>(i)] = Rational(flip[static_cast<std::size_t>(i)]) * y;
        }
    }
    return result;
}

} // namespace fracx
