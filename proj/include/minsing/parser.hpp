#ifndef MINSING_PARSER_HPP
#define MINSING_PARSER_HPP

#include <string>
#include <vector>

#include "minsing/poly.hpp"

namespace minsing {

struct ParsedPoly {
    Poly poly;
    // When the whole expression is a product, the expanded factors with
    // multiplicity; empty otherwise. Lets callers keep factored input
    // around as a classification hint.
    std::vector<Poly> top_factors;
};

ParsedPoly parse_poly(const std::string& text, const std::vector<std::string>& vars);

std::string poly_to_string(const Poly& p, const std::vector<std::string>& vars);

/// "m * (residual)" rendering used for hypersurface rows in traces.
std::string factored_to_string(const Poly& monomial, const Poly& residual,
                               const std::vector<std::string>& vars);

}  // namespace minsing

#endif
