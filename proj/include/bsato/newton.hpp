#pragma once

#include <string>
#include <vector>

#include "bsato/monomial.hpp"
#include "bsato/multiplier_table.hpp"
#include "bsato/rational.hpp"

namespace bsato {

// Monomial ideal, stored as its unique minimal generating set: generators
// pairwise incomparable under divisibility, sorted by (degree, exponents).
struct MonomialIdeal {
    int nvars = 0;
    std::vector<Monomial> gens;
};

// Validates shapes, drops divisible generators, sorts. Throws usage_error on
// an empty generator list or mismatched exponent lengths.
MonomialIdeal monomial_ideal(int nvars, std::vector<Monomial> gens);

// Supporting halfspace <normal, u> >= offset of the Newton polyhedron.
// normal is primitive integer >= 0 (stored as rationals for the arithmetic
// downstream); coordinate == true marks the offset-0 coordinate hyperplanes.
struct Facet {
    std::vector<Rational> normal;
    Rational offset;
    bool coordinate = false;
};

// conv(generator exponents) + positive orthant, as an irredundant facet list.
// Non-coordinate facets come first, each with a tight generator; ambient
// dimension is capped at 6 (exhaustive facet search).
struct NewtonPolyhedron {
    MonomialIdeal source;
    std::vector<Facet> facets;
};

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& a);

// Monomials x^v with deg(v) <= degree_bound and v+1 strictly inside
// alpha*P(a): the multiplier ideal of a at coefficient alpha, truncated.
// The list is upward closed within the bound.
std::vector<Monomial> multiplier_ideal_monomial(const MonomialIdeal& a, const Rational& alpha,
                                                int degree_bound);

// Jumping numbers in (0, alpha_max] visible within the degree bound, with the
// ideal each one drops to (minimal generators of the truncated piece).
// Candidates <l, v+1>/offset are kept only when the truncated ideal changes.
MultiplierTable jumping_numbers_monomial(const MonomialIdeal& a, const Rational& alpha_max,
                                         int degree_bound);

// Smallest jumping number: min over non-coordinate facets of <l, 1>/offset.
Rational lct_monomial(const MonomialIdeal& a);

// Dimension of the multiplier jump at alpha as a vector space, provided the
// jump is supported at the origin alone. If a boundary monomial escapes to
// infinity along a facet with a zero coordinate the jump has positive
// dimensional support and this throws usage_error naming that monomial.
// names, when nonempty, is used for the monomial in the message.
int inner_jumping_multiplicity(const MonomialIdeal& a, const Rational& alpha,
                               const std::vector<std::string>& names = {});

} // namespace bsato
