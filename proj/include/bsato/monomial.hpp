#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace bsato {

// Exponent vector of fixed length (the ambient ring knows the names).
// Comparison operators give the container order (lex on the vector),
// not a term order; term orders live in MonomialOrder.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}
    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

    int nvars() const { return (int)e.size(); }
    int deg() const;
    bool is_one() const;

    bool divides(const Monomial& m) const;
    Monomial operator*(const Monomial& m) const;
    // Componentwise difference; caller guarantees divisibility.
    Monomial operator/(const Monomial& m) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& m) const;

    friend auto operator<=>(const Monomial& a, const Monomial& b) = default;
};

enum class MonomialOrder {
    grevlex, // total degree, ties by smaller exponent in the last differing slot
    lex,     // leftmost differing slot decides
};

// Returns <0, 0, >0 as a precedes/equals/succeeds b in the order.
int cmp_monomial(const Monomial& a, const Monomial& b, MonomialOrder ord);

std::string monomial_str(const Monomial& m, const std::vector<std::string>& names);

} // namespace bsato
