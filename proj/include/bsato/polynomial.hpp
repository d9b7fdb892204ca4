#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bsato/monomial.hpp"
#include "bsato/rational.hpp"

namespace bsato {

// Fixed ordered variable list shared by all polynomials of a ring.
class PolyRing {
public:
    explicit PolyRing(std::vector<std::string> vars);
    int nvars() const { return (int)vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    // Index of a variable name, or -1.
    int var_index(const std::string& name) const;

private:
    std::vector<std::string> vars_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

// Multivariate polynomial over Q. Canonical form: term map keyed by
// exponent vector, no zero coefficients stored. Two polynomials over the
// same ring are equal iff their term maps are identical.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(PolyRingPtr ring, const Rational& c); // constant
    static Polynomial variable(PolyRingPtr ring, int idx, int exp = 1);
    static Polynomial monomial(PolyRingPtr ring, const Monomial& m,
                               const Rational& c = Rational(1));

    const PolyRingPtr& ring() const { return ring_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (0 if absent).
    Rational constant_value() const;
    int total_degree() const; // -1 for zero polynomial
    int nterms() const { return (int)terms_.size(); }
    bool is_monomial() const { return terms_.size() == 1; }
    // The single term of a monomial polynomial.
    std::pair<Monomial, Rational> sole_term() const;

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(int e) const;
    Polynomial derivative(int var) const;
    // Substitute var -> var + delta (exact binomial expansion).
    Polynomial shift_var(int var, const Rational& delta) const;
    // Largest term under ord.
    const Monomial& leading_monomial(MonomialOrder ord) const;
    Rational leading_coeff(MonomialOrder ord) const;

    std::string str() const;

private:
    void require_same_ring(const Polynomial& o) const;

    PolyRingPtr ring_;
    std::map<Monomial, Rational> terms_;
};

// Exact division by a single divisor: returns quotient iff divisor divides
// exactly (remainder zero), nullopt otherwise.
std::optional<Polynomial> try_divide(const Polynomial& p, const Polynomial& divisor);

} // namespace bsato
