#ifndef FRACX_REPORT_HPP
#define FRACX_REPORT_HPP

#include <optional>
#include <string>

#include "fracx/coloring.hpp"
#include "fracx/lp.hpp"
#include "fracx/structural.hpp"

namespace fracx {

/// One machine-readable result line.  Optional fields are omitted from the
/// rendered JSON; `detail_json` may hold a pre-rendered JSON object with
/// subcommand-specific payload.
struct Report {
    std::string graph6;
    int n = 0;
    int m = 0;
    std::optional<int> alpha;
    std::optional<std::optional<int>> girth; // inner nullopt renders "acyclic"
    std::optional<Rational> chi_f;
    std::optional<LPSolution> primal;
    std::optional<DualWitness> dual;
    std::optional<SetColoring> coloring;
    std::string detail_json;
    std::string status = "OK"; // OK | INFEASIBLE | BUDGET | ERROR
    long long elapsed_ms = 0;
};

/// Single-line JSON with a fixed key order; rationals render as "p/q".
/// Identical reports render byte-identically.
std::string render_report(const Report& r);

} // namespace fracx

#endif
