#include "minsing/chart.hpp"

#include <set>

namespace minsing {

const Divisor* Chart::find_divisor(int label) const {
    for (const auto& d : divisors)
        if (d.label == label) return &d;
    return nullptr;
}

std::vector<int> Chart::labels_through_origin() const {
    std::vector<int> out;
    for (const auto& d : divisors)
        if (!d.poly.is_zero() && d.poly.constant_term() == 0) out.push_back(d.label);
    return out;
}

void Chart::check() const {
    std::set<int> labels;
    for (const auto& d : divisors) {
        if (d.poly.is_zero() || d.poly.is_unit())
            throw PreconditionError("divisor polynomial is zero or a unit");
        if (d.poly.arity() != arity()) throw PreconditionError("divisor arity mismatch");
        if (!labels.insert(d.label).second) throw PreconditionError("duplicate divisor label");
        if (d.birth_year > year) throw PreconditionError("divisor born after chart year");
    }
    if (lineage && lineage->parent_id == id) throw PreconditionError("chart is its own parent");
}

std::string subspace_desc(const std::vector<int>& vars, const std::vector<std::string>& names,
                          unsigned arity) {
    if (vars.size() == arity) return "{0}";
    std::string out = "(";
    for (std::size_t i = 0; i < vars.size(); ++i) {
        out += names.at(static_cast<unsigned>(vars[i]));
        out += "=";
    }
    out += "0)";
    return out;
}

}  // namespace minsing
