#ifndef FRACX_DEMAND_HPP
#define FRACX_DEMAND_HPP

#include <string>
#include <vector>

#include "fracx/rational.hpp"

namespace fracx {

/// Per-vertex rational demand in [0, 1].
class DemandFunction {
public:
    DemandFunction() = default;
    explicit DemandFunction(std::vector<Rational> demands);

    static DemandFunction uniform(int n, const Rational& value);

    int size() const { return static_cast<int>(demands_.size()); }
    const Rational& operator[](int v) const { return demands_[static_cast<std::size_t>(v)]; }
    const std::vector<Rational>& values() const { return demands_; }

    bool operator==(const DemandFunction&) const = default;

private:
    std::vector<Rational> demands_;
};

/// Text form shared with weight functions: one "vertex p/q" per line,
/// '#' comments, missing vertices default to 0.
std::vector<Rational> parse_vertex_rationals(const std::string& text, int n);

} // namespace fracx

#endif
