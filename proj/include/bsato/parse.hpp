#pragma once

#include <string>
#include <vector>

#include "bsato/polynomial.hpp"
#include "bsato/univariate.hpp"
#include "bsato/weyl.hpp"

namespace bsato {

// Grammar shared by all three parsers: + - * ^ and parentheses over integer
// or rational literals (the only use of '/' is between two integer literals)
// and known identifiers. No implicit multiplication. Errors are usage_error
// with 1-based columns; an unknown identifier is named in the message.

Polynomial parse_polynomial(const std::string& src, const PolyRingPtr& ring);

// Identifiers may be any ring slot: variables, dx/dy/dt names, parameters.
// Products multiply in the written order (the ring is noncommutative).
WeylElement parse_weyl(const std::string& src, const WeylRingPtr& ring);

// Univariate polynomial in s, accepting the factored display form: adjacent
// parenthesized factors multiply, e.g. "(s+1)(s+5/6)^2".
UnivariatePoly parse_bpoly(const std::string& src);

// Comma-separated list of monic monomials in the ring's variables.
std::vector<Monomial> parse_monomial_list(const std::string& src, const PolyRingPtr& ring);

} // namespace bsato
