#include "fracx/report.hpp"

#include <json.hpp>

#include "fracx/errors.hpp"

namespace fracx {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json coloring_json(const SetColoring& c) {
    ordered_json psi = ordered_json::object();
    for (std::size_t v = 0; v < c.classes.size(); ++v)
        psi[std::to_string(v)] = c.classes[v];
    return ordered_json{{"N", c.palette_size}, {"psi", psi}};
}

} // namespace

std::string render_report(const Report& r) {
    ordered_json j;
    j["graph"] = r.graph6;
    j["n"] = r.n;
    j["m"] = r.m;
    if (r.alpha) j["alpha"] = *r.alpha;
    if (r.girth) {
        if (**r.girth >= 0 && *r.girth)
            j["girth"] = **r.girth;
        else
            j["girth"] = "acyclic";
    }
    if (r.chi_f) j["chi_f"] = r.chi_f->str();
    if (r.primal) {
        ordered_json support = ordered_json::array();
        for (const auto& [set, weight] : r.primal->support)
            support.push_back(ordered_json{{"set", set_to_vertices(set)}, {"weight", weight.str()}});
        j["primal"] = ordered_json{{"value", r.primal->value.str()}, {"support", support}};
    }
    if (r.dual) {
        ordered_json y = ordered_json::object();
        for (std::size_t v = 0; v < r.dual->y.size(); ++v)
            y[std::to_string(v)] = r.dual->y[v].str();
        j["dual"] = ordered_json{{"value", r.dual->value.str()}, {"y", y}};
    }
    if (r.coloring) j["coloring"] = coloring_json(*r.coloring);
    if (!r.detail_json.empty()) {
        ordered_json detail = ordered_json::parse(r.detail_json, nullptr, false);
        if (detail.is_discarded()) throw InputError("detail payload is not valid JSON");
        j["detail"] = detail;
    }
    j["status"] = r.status;
    j["elapsed_ms"] = r.elapsed_ms;
    return j.dump();
}

} // namespace fracx
