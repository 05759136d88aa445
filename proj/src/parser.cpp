#include "minsing/parser.hpp"

#include <cctype>
#include <sstream>

namespace minsing {

namespace {

struct Token {
    enum Kind { Num, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End } kind;
    std::string text;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ >= s_.size()) {
            tok_ = {Token::End, ""};
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_ = {Token::Num, s_.substr(i_, j - i_)};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            tok_ = {Token::Ident, s_.substr(i_, j - i_)};
            i_ = j;
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_ = {Token::Plus, "+"}; return;
            case '-': tok_ = {Token::Minus, "-"}; return;
            case '*': tok_ = {Token::Star, "*"}; return;
            case '^': tok_ = {Token::Caret, "^"}; return;
            case '/': tok_ = {Token::Slash, "/"}; return;
            case '(': tok_ = {Token::LParen, "("}; return;
            case ')': tok_ = {Token::RParen, ")"}; return;
            default: throw ParseError(std::string("unexpected character '") + c + "'");
        }
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_;
};

class Parser {
  public:
    Parser(const std::string& text, const std::vector<std::string>& vars)
        : lex_(text), vars_(vars) {}

    ParsedPoly run() {
        ParsedPoly out = expr(true);
        if (lex_.peek().kind != Token::End) throw ParseError("trailing input in polynomial");
        return out;
    }

  private:
    unsigned arity() const { return static_cast<unsigned>(vars_.size()); }

    ParsedPoly expr(bool top) {
        bool neg = false;
        while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            if (lex_.take().kind == Token::Minus) neg = !neg;
        }
        ParsedPoly acc = product(top && !neg);
        if (neg) {
            acc.poly = -acc.poly;
            acc.top_factors.clear();
        }
        bool sums = false;
        while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            bool minus = lex_.take().kind == Token::Minus;
            ParsedPoly rhs = product(false);
            acc.poly = minus ? acc.poly - rhs.poly : acc.poly + rhs.poly;
            sums = true;
        }
        if (sums) acc.top_factors.clear();
        return acc;
    }

    static bool starts_factor(Token::Kind k) {
        return k == Token::Num || k == Token::Ident || k == Token::LParen;
    }

    ParsedPoly product(bool top) {
        std::vector<Poly> factors;
        Poly acc = power(factors);
        while (lex_.peek().kind == Token::Star || starts_factor(lex_.peek().kind)) {
            if (lex_.peek().kind == Token::Star) lex_.take();
            Poly f = power(factors);
            acc = acc * f;
        }
        ParsedPoly out;
        out.poly = acc;
        if (top && factors.size() > 1) out.top_factors = std::move(factors);
        return out;
    }

    Poly power(std::vector<Poly>& factors) {
        Poly b = base();
        unsigned e = 1;
        if (lex_.peek().kind == Token::Caret) {
            lex_.take();
            Token t = lex_.take();
            if (t.kind != Token::Num) throw ParseError("expected exponent after '^'");
            e = static_cast<unsigned>(std::stoul(t.text));
            if (e > 4096) throw ParseError("exponent too large");
        }
        for (unsigned i = 0; i < e; ++i) factors.push_back(b);
        return b.pow(e);
    }

    Poly base() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Num: {
                Rat r = rat_from_string(t.text);
                if (lex_.peek().kind == Token::Slash) {
                    lex_.take();
                    Token d = lex_.take();
                    if (d.kind != Token::Num) throw ParseError("expected denominator");
                    r /= rat_from_string(d.text);
                }
                return Poly::constant(arity(), r);
            }
            case Token::Ident: {
                for (unsigned i = 0; i < vars_.size(); ++i)
                    if (vars_[i] == t.text) return Poly::variable(arity(), i);
                throw ParseError("unknown variable '" + t.text + "'");
            }
            case Token::LParen: {
                ParsedPoly inner = expr(false);
                if (lex_.take().kind != Token::RParen) throw ParseError("expected ')'");
                return inner.poly;
            }
            default: throw ParseError("unexpected token '" + t.text + "'");
        }
    }

    Lexer lex_;
    const std::vector<std::string>& vars_;
};

std::string monomial_to_string(const Expvec& e, const std::vector<std::string>& vars) {
    std::string out;
    for (unsigned i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

}  // namespace

ParsedPoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
    Parser p(text, vars);
    return p.run();
}

std::string poly_to_string(const Poly& p, const std::vector<std::string>& vars) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rat a = abs(c);
        bool neg = sgn(c) < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono = monomial_to_string(e, vars);
        if (mono.empty()) {
            out += rat_to_string(a);
        } else {
            if (a != 1) out += rat_to_string(a) + "*";
            out += mono;
        }
    }
    return out;
}

std::string factored_to_string(const Poly& monomial, const Poly& residual,
                               const std::vector<std::string>& vars) {
    if (monomial.is_unit() && monomial.constant_term() == 1)
        return poly_to_string(residual, vars);
    std::string m = poly_to_string(monomial, vars);
    if (residual.is_unit() && residual.constant_term() == 1) return m;
    return m + "*(" + poly_to_string(residual, vars) + ")";
}

}  // namespace minsing
