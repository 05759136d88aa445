#ifndef MINSING_MARKED_HPP
#define MINSING_MARKED_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "minsing/chart.hpp"
#include "minsing/poly.hpp"

namespace minsing {

/// Rational-or-infinity, the value domain of residual multiplicities.
struct RatInf {
    bool inf = false;
    Rat v = 0;

    static RatInf infinite() { return RatInf{true, 0}; }
    static RatInf of(Rat r) { return RatInf{false, std::move(r)}; }
    bool operator==(const RatInf& o) const { return inf == o.inf && (inf || v == o.v); }
    bool operator<(const RatInf& o) const {
        if (inf) return false;
        if (o.inf) return true;
        return v < o.v;
    }
};

/// An ideal on a maximal-contact subspace N with a marking. The chain lists
/// the eliminated variables cutting out N (outermost first); generators never
/// involve them. Generators are kept reduced: no zeros, no duplicates,
/// deterministic order.
struct MarkedIdeal {
    std::vector<int> chain;
    std::vector<Poly> generators;
    unsigned marking = 1;
};

/// Formal sum of marked ideals sharing their chain. Kept unexpanded; order
/// computations aggregate per summand with min. An empty summand list is the
/// distinguished ZERO coefficient ideal.
struct WeightedSum {
    std::vector<int> chain;
    std::vector<MarkedIdeal> summands;

    bool is_zero() const { return summands.empty(); }
};

std::vector<Poly> reduce_generators(std::vector<Poly> gens);
OrdVal ideal_ord(const std::vector<Poly>& gens);

bool cosupp_contains_origin(const MarkedIdeal& m);

WeightedSum sum(const MarkedIdeal& a, const MarkedIdeal& b);
WeightedSum sum_append(WeightedSum w, MarkedIdeal b);
/// Literal lcm expansion (I^{l/d} + J^{l/e}, l). Exponential in the markings;
/// test oracle for the unexpanded representation.
MarkedIdeal expand(const WeightedSum& w);

/// Canonical form of a sum: reduced summands, deterministic order, duplicates
/// with equal generators collapsed to the largest marking.
WeightedSum canonical_sum(WeightedSum w);

struct MonomialSplit {
    std::map<int, unsigned> exponents;  // divisor label -> extracted power
    std::vector<Poly> residual;
    Poly monomial;  // product of divisor powers, unit when nothing extracted
};

/// Divisor polynomials restricted to the chain subspace (chain vars set to 0).
Poly divisor_on_chain(const Divisor& d, const std::vector<int>& chain);

MonomialSplit monomial_residual_split(const Chart& ch, const MarkedIdeal& m,
                                      const std::vector<int>& active_labels);

RatInf residual_multiplicity(const Chart& ch, const MarkedIdeal& m,
                             const std::vector<int>& active_labels);
RatInf residual_multiplicity(const Chart& ch, const WeightedSum& w,
                             const std::vector<int>& active_labels);

/// Companion: (R, ord R) when ord R >= d, else (R, ord R) + (M, d - ord R).
/// Applied per summand for sums. Errors when some residual is the unit ideal.
WeightedSum companion(const Chart& ch, const WeightedSum& w,
                      const std::vector<int>& active_labels);

/// Generators plus all first partials in the N-variables, marked d-1.
MarkedIdeal derivative_ideal(const Chart& ch, const MarkedIdeal& m);

/// Sum over j = 0..d-1 of ((D_z^j I)|_{z=0}, d-j) per summand, zero summands
/// dropped. Empty result is the ZERO marker. z must be a chart variable not
/// already in the chain.
WeightedSum coefficient_ideal(const Chart& ch, const WeightedSum& j_sum, int z_var);

/// Appends (I_H|_N, 1) for each divisor in the block. Restrictions that
/// vanish identically contribute nothing; a unit restriction means the
/// divisor misses the origin and is an error.
WeightedSum add_boundary(const Chart& ch, WeightedSum w, const std::set<int>& block);

struct TransformSet {
    Poly total;
    Poly controlled;
    Poly strict;
};

}  // namespace minsing

#endif
