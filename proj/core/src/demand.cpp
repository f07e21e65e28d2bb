#include "fracx/demand.hpp"

#include <sstream>

#include "fracx/errors.hpp"

namespace fracx {

DemandFunction::DemandFunction(std::vector<Rational> demands) : demands_(std::move(demands)) {
    for (std::size_t v = 0; v < demands_.size(); ++v) {
        if (demands_[v] < Rational(0) || demands_[v] > Rational(1))
            throw InputError("demand at vertex " + std::to_string(v) + " outside [0, 1]: " +
                             demands_[v].str());
    }
}

DemandFunction DemandFunction::uniform(int n, const Rational& value) {
    return DemandFunction(std::vector<Rational>(static_cast<std::size_t>(n), value));
}

std::vector<Rational> parse_vertex_rationals(const std::string& text, int n) {
    std::vector<Rational> out(static_cast<std::size_t>(n), Rational(0));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        int v;
        std::string value;
        if (!(ls >> v)) continue; // blank
        if (!(ls >> value))
            throw InputError("vertex value file: missing value on line " + std::to_string(lineno));
        std::string extra;
        if (ls >> extra)
            throw InputError("vertex value file: junk on line " + std::to_string(lineno));
        if (v < 0 || v >= n)
            throw InputError("vertex value file: vertex out of range on line " +
                             std::to_string(lineno));
        if (seen[static_cast<std::size_t>(v)])
            throw InputError("vertex value file: duplicate vertex " + std::to_string(v));
        seen[static_cast<std::size_t>(v)] = true;
        out[static_cast<std::size_t>(v)] = Rational::parse(value);
    }
    return out;
}

} // namespace fracx
