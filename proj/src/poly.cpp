#include "minsing/poly.hpp"

#include <algorithm>

namespace minsing {

std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

bool rat_is_square(const Rat& r) {
    if (sgn(r) < 0) return false;
    return mpz_perfect_square_p(r.get_num_mpz_t()) && mpz_perfect_square_p(r.get_den_mpz_t());
}

static Rat rat_sqrt(const Rat& r) {
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
    Rat out(n, d);
    out.canonicalize();
    return out;
}

bool TermLess::operator()(const Expvec& a, const Expvec& b) const {
    uint64_t da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da < db;
    return a < b;
}

Poly Poly::constant(unsigned arity, const Rat& c) {
    Poly p(arity);
    p.add_term(Expvec(arity, 0), c);
    return p;
}

Poly Poly::variable(unsigned arity, unsigned i) {
    Poly p(arity);
    Expvec e(arity, 0);
    e.at(i) = 1;
    p.add_term(e, Rat(1));
    return p;
}

Poly Poly::term(unsigned arity, Expvec e, const Rat& c) {
    if (e.size() != arity) throw PreconditionError("exponent vector arity mismatch");
    Poly p(arity);
    p.add_term(std::move(e), c);
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Expvec& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](uint32_t k) { return k == 0; });
}

std::optional<unsigned> Poly::as_scaled_variable() const {
    if (terms_.size() != 1) return std::nullopt;
    const Expvec& e = terms_.begin()->first;
    int idx = -1;
    for (unsigned i = 0; i < e.size(); ++i) {
        if (e[i] == 1 && idx < 0)
            idx = static_cast<int>(i);
        else if (e[i] != 0)
            return std::nullopt;
    }
    if (idx < 0) return std::nullopt;
    return static_cast<unsigned>(idx);
}

void Poly::add_term(const Expvec& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly out(arity_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Poly Poly::operator+(const Poly& q) const {
    Poly out = *this;
    out += q;
    return out;
}

Poly Poly::operator-(const Poly& q) const {
    Poly out = *this;
    out -= q;
    return out;
}

Poly& Poly::operator+=(const Poly& q) {
    if (arity_ != q.arity_) throw PreconditionError("arity mismatch in +");
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& q) {
    if (arity_ != q.arity_) throw PreconditionError("arity mismatch in -");
    for (const auto& [e, c] : q.terms_) add_term(e, -c);
    return *this;
}

Poly Poly::operator*(const Poly& q) const {
    if (arity_ != q.arity_) throw PreconditionError("arity mismatch in *");
    Poly out(arity_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : q.terms_) {
            Expvec e(arity_);
            for (unsigned i = 0; i < arity_; ++i) {
                uint64_t s = static_cast<uint64_t>(ea[i]) + eb[i];
                if (s > (1u << 30)) throw PreconditionError("exponent overflow");
                e[i] = static_cast<uint32_t>(s);
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Poly Poly::scaled(const Rat& c) const {
    Poly out(arity_);
    if (c == 0) return out;
    for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
    return out;
}

Poly Poly::pow(unsigned e) const {
    Poly out = Poly::constant(arity_, 1);
    for (unsigned i = 0; i < e; ++i) out = out * (*this);
    return out;
}

Poly Poly::partial(unsigned var) const {
    Poly out(arity_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Expvec d = e;
        d[var] -= 1;
        out.add_term(d, c * Rat(e[var]));
    }
    return out;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (images.size() != arity_) throw PreconditionError("substitute: wrong number of images");
    unsigned target = arity_ == 0 ? 0 : images.front().arity();
    for (const auto& im : images)
        if (im.arity() != target) throw PreconditionError("substitute: image arity mismatch");
    Poly out(target);
    for (const auto& [e, c] : terms_) {
        Poly t = Poly::constant(target, c);
        for (unsigned i = 0; i < arity_; ++i)
            if (e[i] > 0) t = t * images[i].pow(e[i]);
        out += t;
    }
    return out;
}

Poly Poly::translate(const std::vector<Rat>& point) const {
    if (point.size() != arity_) throw PreconditionError("translate: arity mismatch");
    std::vector<Poly> images;
    images.reserve(arity_);
    for (unsigned i = 0; i < arity_; ++i)
        images.push_back(Poly::variable(arity_, i) + Poly::constant(arity_, point[i]));
    return substitute(images);
}

Poly Poly::set_var(unsigned var, const Poly& value) const {
    if (value.arity() != arity_) throw PreconditionError("set_var: arity mismatch");
    Poly out(arity_);
    for (const auto& [e, c] : terms_) {
        Expvec rest = e;
        rest[var] = 0;
        Poly t = Poly::term(arity_, rest, c);
        if (e[var] > 0) t = t * value.pow(e[var]);
        out += t;
    }
    return out;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
    if (point.size() != arity_) throw PreconditionError("eval: arity mismatch");
    Rat out(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (unsigned i = 0; i < arity_; ++i)
            for (uint32_t k = 0; k < e[i]; ++k) t *= point[i];
        out += t;
    }
    return out;
}

OrdVal Poly::ord_at_origin() const {
    if (terms_.empty()) return OrdVal::infinite();
    // first term in the canonical (degree-ascending) order has minimal degree
    const Expvec& e = terms_.begin()->first;
    uint64_t d = 0;
    for (auto k : e) d += k;
    return OrdVal::of(static_cast<unsigned>(d));
}

OrdVal Poly::ord_along_subspace(const std::vector<int>& vars) const {
    if (terms_.empty()) return OrdVal::infinite();
    uint64_t best = UINT64_MAX;
    for (const auto& [e, c] : terms_) {
        uint64_t s = 0;
        for (int v : vars) s += e.at(static_cast<unsigned>(v));
        best = std::min(best, s);
    }
    return OrdVal::of(static_cast<unsigned>(best));
}

unsigned Poly::total_degree() const {
    if (terms_.empty()) return 0;
    const Expvec& e = terms_.rbegin()->first;
    uint64_t d = 0;
    for (auto k : e) d += k;
    return static_cast<unsigned>(d);
}

unsigned Poly::degree_in(unsigned var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

Poly Poly::coeff_in(unsigned var, unsigned k) const {
    Poly out(arity_);
    for (const auto& [e, c] : terms_) {
        if (e[var] != k) continue;
        Expvec d = e;
        d[var] = 0;
        out.add_term(d, c);
    }
    return out;
}

Rat Poly::coeff(const Expvec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat Poly::constant_term() const {
    return coeff(Expvec(arity_, 0));
}

Poly Poly::linear_part() const {
    Poly out(arity_);
    for (const auto& [e, c] : terms_) {
        uint64_t d = 0;
        for (auto k : e) d += k;
        if (d == 1) out.add_term(e, c);
    }
    return out;
}

bool Poly::depends_on(unsigned var) const {
    for (const auto& [e, c] : terms_)
        if (e[var] > 0) return true;
    return false;
}

std::optional<Poly> Poly::divided_by(const Poly& h) const {
    if (h.is_zero()) throw PreconditionError("division by zero polynomial");
    if (arity_ != h.arity_) throw PreconditionError("arity mismatch in division");
    Poly q(arity_);
    Poly r = *this;
    const Expvec& lh = h.terms_.rbegin()->first;
    const Rat& ch = h.terms_.rbegin()->second;
    while (!r.is_zero()) {
        const Expvec& lr = r.terms_.rbegin()->first;
        Expvec d(arity_);
        for (unsigned i = 0; i < arity_; ++i) {
            if (lr[i] < lh[i]) return std::nullopt;
            d[i] = lr[i] - lh[i];
        }
        Poly t = Poly::term(arity_, d, r.terms_.rbegin()->second / ch);
        q += t;
        r -= t * h;
    }
    return q;
}

unsigned Poly::ord_along(const Poly& h) const {
    if (h.is_zero() || h.is_unit()) throw PreconditionError("ord_along: divisor is zero or a unit");
    if (is_zero()) throw PreconditionError("ord_along of the zero polynomial");
    unsigned mu = 0;
    Poly cur = *this;
    while (true) {
        auto q = cur.divided_by(h);
        if (!q) return mu;
        cur = std::move(*q);
        ++mu;
    }
}

std::optional<Poly> Poly::sqrt_exact() const {
    if (is_zero()) return Poly(arity_);
    const Expvec& le = terms_.rbegin()->first;
    const Rat& lc = terms_.rbegin()->second;
    Expvec half(arity_);
    for (unsigned i = 0; i < arity_; ++i) {
        if (le[i] % 2 != 0) return std::nullopt;
        half[i] = le[i] / 2;
    }
    if (!rat_is_square(lc)) return std::nullopt;
    Poly root = Poly::term(arity_, half, rat_sqrt(lc));
    // peel off lower terms: if *this = root^2 + rest, the leading term of rest
    // determines the next term of the root as rest_lead / (2 * root_lead)
    Poly lead = root;
    while (true) {
        Poly rest = *this - root * root;
        if (rest.is_zero()) return root;
        const Expvec& re = rest.terms_.rbegin()->first;
        Expvec d(arity_);
        for (unsigned i = 0; i < arity_; ++i) {
            if (re[i] < half[i]) return std::nullopt;
            d[i] = re[i] - half[i];
        }
        // next term must be strictly below the current minimal term of root
        Poly t = Poly::term(arity_, d, rest.terms_.rbegin()->second / (Rat(2) * lead.terms_.begin()->second));
        TermLess less;
        if (!less(t.terms().begin()->first, root.terms().begin()->first)) return std::nullopt;
        root += t;
    }
}

int Poly::compare(const Poly& a, const Poly& b) {
    if (a.arity_ != b.arity_) return a.arity_ < b.arity_ ? -1 : 1;
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    TermLess less;
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (less(ia->first, ib->first)) return -1;
        if (less(ib->first, ia->first)) return 1;
        int c = cmp(ia->second, ib->second);
        if (c != 0) return c;
    }
    if (ia != a.terms_.end()) return 1;
    if (ib != b.terms_.end()) return -1;
    return 0;
}

}  // namespace minsing
