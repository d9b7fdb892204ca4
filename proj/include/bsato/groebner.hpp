#pragma once

#include <optional>
#include <vector>

#include "bsato/polynomial.hpp"

namespace bsato {

// Normal form of p modulo the (not necessarily Groebner) basis gens.
Polynomial poly_normal_form(const Polynomial& p, const std::vector<Polynomial>& gens,
                            MonomialOrder ord);

// Reduced monic Groebner basis, sorted by leading monomial ascending.
// Deterministic for a given input sequence.
std::vector<Polynomial> poly_groebner(std::vector<Polynomial> gens, MonomialOrder ord);

bool poly_ideal_member(const Polynomial& p, const std::vector<Polynomial>& gb,
                       MonomialOrder ord);

// Monomials outside the leading-term ideal of gb. Requires the quotient to be a
// finite-dimensional vector space: some pure power of every variable must appear
// among the leading monomials. Returns nullopt otherwise.
std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Polynomial>& gb,
                                                        MonomialOrder ord);

} // namespace bsato
