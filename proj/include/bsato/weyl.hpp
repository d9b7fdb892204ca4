#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bsato/monomial.hpp"
#include "bsato/polynomial.hpp"
#include "bsato/rational.hpp"

namespace bsato {

class WeylRing;
using WeylRingPtr = std::shared_ptr<const WeylRing>;

// Ring of polynomial differential operators: n positions x_i, n derivations
// d_i with the relation d_i x_i = x_i d_i + 1, plus central commuting
// parameters. A normally ordered term is coeff * x^a * d^b * p^c; exponents
// are stored flat as [x_0..x_{n-1} | d_0..d_{n-1} | p_0..p_{m-1}] and, on
// rings produced by homogenized(), a trailing slot for the central
// homogenization variable h (relation d_i x_i = x_i d_i + h^2).
class WeylRing {
public:
    WeylRing(std::vector<std::string> x, std::vector<std::string> d,
             std::vector<std::string> params = {});

    int npairs() const { return (int)nx_; }
    int nparams() const { return (int)np_; }
    bool homog() const { return homog_; }
    int nslots() const { return 2 * (int)nx_ + (int)np_ + (homog_ ? 1 : 0); }

    int x_slot(int i) const { return i; }
    int d_slot(int i) const { return (int)nx_ + i; }
    int p_slot(int k) const { return 2 * (int)nx_ + k; }
    int h_slot() const { return 2 * (int)nx_ + (int)np_; }

    bool is_x(int slot) const { return slot < (int)nx_; }
    bool is_d(int slot) const { return slot >= (int)nx_ && slot < 2 * (int)nx_; }
    bool is_param(int slot) const {
        return slot >= 2 * (int)nx_ && slot < 2 * (int)nx_ + (int)np_;
    }
    bool is_h(int slot) const { return homog_ && slot == h_slot(); }

    const std::vector<std::string>& names() const { return names_; }
    const std::string& slot_name(int slot) const { return names_[slot]; }
    int find(const std::string& name) const;

    static WeylRingPtr make(std::vector<std::string> x, std::vector<std::string> d,
                            std::vector<std::string> params = {});
    // Same ring with the trailing homogenization slot added.
    WeylRingPtr homogenized() const;

    bool same_layout(const WeylRing& o) const { return names_ == o.names_ && homog_ == o.homog_; }

private:
    size_t nx_, np_;
    bool homog_ = false;
    std::vector<std::string> names_;
};

class WeylElement {
public:
    WeylElement() = default;
    explicit WeylElement(WeylRingPtr ring) : ring_(std::move(ring)) {}
    WeylElement(WeylRingPtr ring, const Rational& c);
    static WeylElement generator(WeylRingPtr ring, int slot, int exp = 1);
    static WeylElement term(WeylRingPtr ring, const Monomial& m, const Rational& c);
    // Image of a commutative polynomial: each ring variable must name a slot
    // (typically an x-slot or parameter).
    static WeylElement from_poly(WeylRingPtr ring, const Polynomial& p);

    const WeylRingPtr& ring() const { return ring_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int nterms() const { return (int)terms_.size(); }

    void add_term(const Monomial& m, const Rational& c);

    WeylElement operator-() const;
    WeylElement& operator+=(const WeylElement& o);
    WeylElement& operator-=(const WeylElement& o);
    friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
    friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
    WeylElement& operator*=(const Rational& c);
    friend WeylElement operator*(WeylElement a, const Rational& c) { return a *= c; }
    friend WeylElement operator*(const Rational& c, WeylElement a) { return a *= c; }
    friend bool operator==(const WeylElement& a, const WeylElement& b);
    friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

    std::string str() const;

private:
    WeylRingPtr ring_;
    std::map<Monomial, Rational> terms_;
};

// Exact product rewritten into normal order:
// d^m x^n = sum_k k! C(m,k) C(n,k) x^{n-k} d^{m-k} (times h^{2k} if homogenized).
WeylElement normal_order_product(const WeylElement& a, const WeylElement& b);
inline WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    return normal_order_product(a, b);
}
WeylElement commutator(const WeylElement& a, const WeylElement& b);

struct OrderSpec {
    enum class Kind { grevlex, lex, weight, elim };
    Kind kind = Kind::grevlex;
    std::vector<Rational> weights; // kind == weight: one entry per slot; ties by grevlex
    std::vector<int> elim_slots;   // kind == elim: their total degree compared first

    static OrderSpec grevlex_order() { return {}; }
    static OrderSpec lex_order() { return {Kind::lex, {}, {}}; }
    static OrderSpec weight_order(std::vector<Rational> w) {
        return {Kind::weight, std::move(w), {}};
    }
    static OrderSpec elim_order(std::vector<int> slots) {
        return {Kind::elim, {}, std::move(slots)};
    }
};

int cmp_weyl_monomial(const Monomial& a, const Monomial& b, const OrderSpec& ord);

// Reduced left Groebner basis, monic, sorted ascending by leading monomial.
// Weight orders with a negative x/d entry are handled by internal
// homogenization (the result is then minimal and monic but not tail-reduced,
// since tail reduction need not terminate for such orders).
std::vector<WeylElement> left_groebner(const std::vector<WeylElement>& gens,
                                       const OrderSpec& ord);

// Remainder of left division; zero iff p lies in the left ideal when gb is a
// Groebner basis under ord. Requires a well-order (any OrderSpec with
// non-negative weights).
WeylElement normal_form(const WeylElement& p, const std::vector<WeylElement>& gb,
                        const OrderSpec& ord);

// Generators of (left ideal of gens) intersected with the subalgebra without
// the kill slots. kill must consist of whole (x_i, d_i) pairs and/or
// parameters.
std::vector<WeylElement> eliminate(const std::vector<WeylElement>& gens,
                                   const std::vector<int>& kill);

// Terms of maximal <w, exponent>.
WeylElement initial_form(const WeylElement& g, const std::vector<Rational>& w);

} // namespace bsato
