#pragma once

#include <string>
#include <vector>

#include "bsato/rational.hpp"

namespace bsato {

// Dense univariate polynomial over Q, coefficients ascending by degree,
// no trailing zero coefficient stored (zero polynomial = empty).
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<Rational> coeffs);
    static UnivariatePoly constant(const Rational& c);
    // (x + c) convenience factor.
    static UnivariatePoly linear_factor(const Rational& c);

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; } // -1 for zero
    Rational coeff(int k) const { return k < (int)c_.size() ? c_[k] : Rational(0); }
    Rational leading() const;

    UnivariatePoly operator-() const;
    friend UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
    UnivariatePoly operator*(const Rational& s) const;
    friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) {
        return a.c_ == b.c_;
    }

    Rational operator()(const Rational& x) const; // Horner, exact
    UnivariatePoly derivative() const;
    UnivariatePoly monic() const;
    // Quotient by (x - root); caller guarantees (*this)(root) == 0.
    UnivariatePoly deflate(const Rational& root) const;
    // Divisibility test by another univariate polynomial.
    bool divisible_by(const UnivariatePoly& d) const;

    // Content-free integer coefficient vector with positive leading entry.
    std::vector<mpz_class> primitive_integer_form() const;

    std::string str(const std::string& var = "s") const;

private:
    void trim();
    std::vector<Rational> c_;
};

struct RootList {
    // (root, multiplicity), sorted ascending by root.
    std::vector<std::pair<Rational, int>> roots;
    // Factor with no rational roots left, so that
    // p == cofactor * prod (x - root)^mult. Constant when fully split.
    UnivariatePoly cofactor;
};

// All rational roots with multiplicities via the rational root theorem on the
// primitive integer form. Exact; never uses floating point.
RootList rational_roots(const UnivariatePoly& p);

// Divisor enumeration support (exposed for tests): positive divisors of |n|.
std::vector<mpz_class> positive_divisors(const mpz_class& n);

} // namespace bsato
