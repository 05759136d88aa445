#ifndef MINSING_POLY_HPP
#define MINSING_POLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace minsing {

using Rat = mpq_class;

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);
bool rat_is_square(const Rat& r);

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Order of vanishing; infinite for the zero polynomial / zero ideal.
struct OrdVal {
    bool inf = false;
    unsigned v = 0;

    static OrdVal infinite() { return OrdVal{true, 0}; }
    static OrdVal of(unsigned k) { return OrdVal{false, k}; }

    bool operator==(const OrdVal& o) const { return inf == o.inf && (inf || v == o.v); }
    bool operator<(const OrdVal& o) const {
        if (inf) return false;
        if (o.inf) return true;
        return v < o.v;
    }
    bool operator>=(unsigned k) const { return inf || v >= k; }
};

using Expvec = std::vector<uint32_t>;

// Canonical term order: total degree first, then lexicographic on the
// exponent vector. Storage and printing both use the ascending sequence,
// so equal polynomials serialize identically.
struct TermLess {
    bool operator()(const Expvec& a, const Expvec& b) const;
};

class Poly {
  public:
    Poly() : arity_(0) {}
    explicit Poly(unsigned arity) : arity_(arity) {}

    static Poly zero(unsigned arity) { return Poly(arity); }
    static Poly constant(unsigned arity, const Rat& c);
    static Poly variable(unsigned arity, unsigned i);
    static Poly term(unsigned arity, Expvec e, const Rat& c);

    unsigned arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_unit() const { return is_constant() && !is_zero(); }
    // c * x_i with c != 0 -> i
    std::optional<unsigned> as_scaled_variable() const;

    const std::map<Expvec, Rat, TermLess>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Poly operator-() const;
    Poly operator+(const Poly& q) const;
    Poly operator-(const Poly& q) const;
    Poly operator*(const Poly& q) const;
    Poly& operator+=(const Poly& q);
    Poly& operator-=(const Poly& q);
    bool operator==(const Poly& q) const { return arity_ == q.arity_ && terms_ == q.terms_; }
    bool operator!=(const Poly& q) const { return !(*this == q); }

    Poly scaled(const Rat& c) const;
    Poly pow(unsigned e) const;

    Poly partial(unsigned var) const;
    Poly substitute(const std::vector<Poly>& images) const;
    Poly translate(const std::vector<Rat>& point) const;
    /// Substitute a single variable by a polynomial, others unchanged.
    Poly set_var(unsigned var, const Poly& value) const;
    Rat eval(const std::vector<Rat>& point) const;

    OrdVal ord_at_origin() const;
    /// Minimum over terms of the sum of the exponents of `vars`
    /// (the order of vanishing along the coordinate subspace they cut out).
    OrdVal ord_along_subspace(const std::vector<int>& vars) const;
    unsigned total_degree() const;  // 0 for the zero polynomial
    unsigned degree_in(unsigned var) const;
    /// Coefficient of var^k as a polynomial of the same arity (var-free).
    Poly coeff_in(unsigned var, unsigned k) const;
    Rat coeff(const Expvec& e) const;
    Rat constant_term() const;
    Poly linear_part() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool depends_on(unsigned var) const;

    /// Exact division by a single polynomial via leading-term cancellation
    /// under the canonical order; nullopt when not divisible.
    std::optional<Poly> divided_by(const Poly& h) const;
    /// Largest mu with h^mu dividing this polynomial.
    /// Requires h nonzero and not a unit; requires *this nonzero.
    unsigned ord_along(const Poly& h) const;
    /// Exact polynomial square root when one exists.
    std::optional<Poly> sqrt_exact() const;

    /// Deterministic total order used for canonical sorting of generator lists.
    static int compare(const Poly& a, const Poly& b);

  private:
    unsigned arity_;
    std::map<Expvec, Rat, TermLess> terms_;

    void add_term(const Expvec& e, const Rat& c);
};

}  // namespace minsing

#endif
