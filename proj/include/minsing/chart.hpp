#ifndef MINSING_CHART_HPP
#define MINSING_CHART_HPP

#include <optional>
#include <string>
#include <vector>

#include "minsing/poly.hpp"

namespace minsing {

/// A component of the exceptional divisor, tracked as a polynomial because
/// strict transforms under later blow-ups can leave coordinate form.
struct Divisor {
    int label = 0;  // position in the ordered divisor set; unique per chart
    Poly poly;
    int birth_year = 0;
};

struct Lineage {
    int parent_id = -1;
    std::string center_desc;
    std::vector<Poly> images;  // substitution into parent coordinates
};

struct Chart {
    int id = 0;
    int year = 0;
    std::vector<std::string> vars;
    std::vector<Divisor> divisors;
    std::optional<Lineage> lineage;

    unsigned arity() const { return static_cast<unsigned>(vars.size()); }
    const Divisor* find_divisor(int label) const;
    /// Divisors whose hypersurface passes through the chart origin.
    std::vector<int> labels_through_origin() const;
    void check() const;
};

std::string subspace_desc(const std::vector<int>& vars, const std::vector<std::string>& names,
                          unsigned arity);

}  // namespace minsing

#endif
