#include "bsato/parse.hpp"

#include <cctype>
#include <memory>

#include "bsato/error.hpp"

namespace bsato {

namespace {

struct Token {
    enum Kind { integer, ident, plus, minus, star, caret, slash, lparen, rparen, comma, end };
    Kind kind;
    std::string text;
    int col; // 1-based
};

struct Lexer {
    const std::string& src;
    size_t pos = 0;
    Token tok;

    explicit Lexer(const std::string& s) : src(s) { advance(); }

    [[noreturn]] void fail(int col, const std::string& what) const {
        throw usage_error("syntax error at column " + std::to_string(col) + ": " + what);
    }

    void advance() {
        while (pos < src.size() && std::isspace((unsigned char)src[pos])) ++pos;
        int col = (int)pos + 1;
        if (pos >= src.size()) {
            tok = {Token::end, "", col};
            return;
        }
        char c = src[pos];
        if (std::isdigit((unsigned char)c)) {
            size_t start = pos;
            while (pos < src.size() && std::isdigit((unsigned char)src[pos])) ++pos;
            tok = {Token::integer, src.substr(start, pos - start), col};
            return;
        }
        if (std::isalpha((unsigned char)c) || c == '_' || c == '@') {
            size_t start = pos;
            while (pos < src.size() &&
                   (std::isalnum((unsigned char)src[pos]) || src[pos] == '_' || src[pos] == '@'))
                ++pos;
            tok = {Token::ident, src.substr(start, pos - start), col};
            return;
        }
        ++pos;
        switch (c) {
            case '+': tok = {Token::plus, "+", col}; return;
            case '-': tok = {Token::minus, "-", col}; return;
            case '*': tok = {Token::star, "*", col}; return;
            case '^': tok = {Token::caret, "^", col}; return;
            case '/': tok = {Token::slash, "/", col}; return;
            case '(': tok = {Token::lparen, "(", col}; return;
            case ')': tok = {Token::rparen, ")", col}; return;
            case ',': tok = {Token::comma, ",", col}; return;
        }
        fail(col, std::string("unexpected character '") + c + "'");
    }
};

int parse_exponent(Lexer& lx) {
    if (lx.tok.kind != Token::integer)
        lx.fail(lx.tok.col, "expected an integer exponent after '^'");
    if (lx.tok.text.size() > 4) lx.fail(lx.tok.col, "exponent too large");
    int e = std::stoi(lx.tok.text);
    lx.advance();
    return e;
}

// Recursive descent shared by the polynomial and operator parsers. Builder
// supplies the value type and the ring-specific pieces.
template <typename Builder>
class Parser {
public:
    using Value = typename Builder::Value;

    Parser(Lexer& lx, const Builder& b, bool adjacent_factors)
        : lx_(lx), b_(b), adjacent_(adjacent_factors) {}

    Value expr() {
        bool neg = false;
        if (lx_.tok.kind == Token::plus || lx_.tok.kind == Token::minus) {
            neg = lx_.tok.kind == Token::minus;
            lx_.advance();
        }
        Value acc = term();
        if (neg) acc = b_.negate(acc);
        while (lx_.tok.kind == Token::plus || lx_.tok.kind == Token::minus) {
            bool sub = lx_.tok.kind == Token::minus;
            lx_.advance();
            Value t = term();
            acc = sub ? b_.sub(acc, t) : b_.add(acc, t);
        }
        return acc;
    }

    void finish() {
        if (lx_.tok.kind == Token::slash)
            lx_.fail(lx_.tok.col, "'/' is only allowed between integer literals");
        if (lx_.tok.kind != Token::end)
            lx_.fail(lx_.tok.col, "unexpected '" + lx_.tok.text + "'");
    }

    bool at_comma() const { return lx_.tok.kind == Token::comma; }
    void eat_comma() { lx_.advance(); }
    bool at_end() const { return lx_.tok.kind == Token::end; }

private:
    Value term() {
        Value acc = factor();
        for (;;) {
            if (lx_.tok.kind == Token::star) {
                lx_.advance();
                acc = b_.mul(acc, factor());
            } else if (adjacent_ && lx_.tok.kind == Token::lparen) {
                acc = b_.mul(acc, factor());
            } else {
                return acc;
            }
        }
    }

    Value factor() {
        if (lx_.tok.kind == Token::minus) {
            lx_.advance();
            return b_.negate(factor());
        }
        Value v = primary();
        if (lx_.tok.kind == Token::caret) {
            lx_.advance();
            int e = parse_exponent(lx_);
            v = b_.power(v, e);
        }
        return v;
    }

    Value primary() {
        switch (lx_.tok.kind) {
            case Token::integer: {
                Rational num = Rational::parse(lx_.tok.text);
                lx_.advance();
                if (lx_.tok.kind == Token::slash) {
                    lx_.advance();
                    if (lx_.tok.kind != Token::integer)
                        lx_.fail(lx_.tok.col, "'/' is only allowed between integer literals");
                    Rational den = Rational::parse(lx_.tok.text);
                    if (den.is_zero()) lx_.fail(lx_.tok.col, "division by zero");
                    lx_.advance();
                    num /= den;
                }
                return b_.constant(num);
            }
            case Token::ident: {
                Value v = b_.identifier(lx_.tok.text, lx_.tok.col);
                lx_.advance();
                return v;
            }
            case Token::lparen: {
                lx_.advance();
                Value v = expr();
                if (lx_.tok.kind != Token::rparen) lx_.fail(lx_.tok.col, "expected ')'");
                lx_.advance();
                return v;
            }
            case Token::end:
                lx_.fail(lx_.tok.col, "unexpected end of input");
            default:
                lx_.fail(lx_.tok.col, "unexpected '" + lx_.tok.text + "'");
        }
    }

    Lexer& lx_;
    const Builder& b_;
    bool adjacent_;
};

struct PolyBuilder {
    using Value = Polynomial;
    PolyRingPtr ring;

    Value constant(const Rational& c) const { return Polynomial(ring, c); }
    Value identifier(const std::string& name, int col) const {
        int idx = ring->var_index(name);
        if (idx < 0)
            throw usage_error("unknown identifier \"" + name + "\" at column " +
                              std::to_string(col));
        return Polynomial::variable(ring, idx);
    }
    Value negate(const Value& v) const { return -v; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value power(const Value& v, int e) const { return v.pow(e); }
};

struct WeylBuilder {
    using Value = WeylElement;
    WeylRingPtr ring;

    Value constant(const Rational& c) const { return WeylElement(ring, c); }
    Value identifier(const std::string& name, int col) const {
        int slot = ring->find(name);
        if (slot < 0)
            throw usage_error("unknown identifier \"" + name + "\" at column " +
                              std::to_string(col));
        return WeylElement::generator(ring, slot);
    }
    Value negate(const Value& v) const { return -v; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return normal_order_product(a, b); }
    Value power(const Value& v, int e) const {
        Value acc(ring, Rational(1));
        for (int i = 0; i < e; ++i) acc = normal_order_product(acc, v);
        return acc;
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& src, const PolyRingPtr& ring) {
    Lexer lx(src);
    Parser<PolyBuilder> p(lx, {ring}, false);
    Polynomial v = p.expr();
    p.finish();
    return v;
}

WeylElement parse_weyl(const std::string& src, const WeylRingPtr& ring) {
    Lexer lx(src);
    Parser<WeylBuilder> p(lx, {ring}, false);
    WeylElement v = p.expr();
    p.finish();
    return v;
}

UnivariatePoly parse_bpoly(const std::string& src) {
    auto sring = std::make_shared<PolyRing>(std::vector<std::string>{"s"});
    Lexer lx(src);
    Parser<PolyBuilder> p(lx, {sring}, true);
    Polynomial v = p.expr();
    p.finish();
    std::vector<Rational> coeffs(v.is_zero() ? 0 : v.total_degree() + 1);
    for (const auto& [m, c] : v.terms()) coeffs[m.e[0]] = c;
    return UnivariatePoly(std::move(coeffs));
}

std::vector<Monomial> parse_monomial_list(const std::string& src, const PolyRingPtr& ring) {
    Lexer lx(src);
    Parser<PolyBuilder> p(lx, {ring}, false);
    std::vector<Monomial> out;
    for (;;) {
        int col = lx.tok.col;
        Polynomial v = p.expr();
        if (v.is_zero() || !v.is_monomial() || !v.sole_term().second.is_one())
            throw usage_error("ideal generators must be monic monomials (column " +
                              std::to_string(col) + ")");
        out.push_back(v.sole_term().first);
        if (p.at_comma()) {
            p.eat_comma();
            continue;
        }
        p.finish();
        return out;
    }
}

} // namespace bsato
