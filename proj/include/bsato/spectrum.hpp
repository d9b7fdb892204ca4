#pragma once

#include <map>
#include <vector>

#include "bsato/monomial.hpp"
#include "bsato/polynomial.hpp"
#include "bsato/rational.hpp"

namespace bsato {

// Positive weights making f weighted-homogeneous of weighted degree 1, i.e.
// sum_i w_i x_i df/dx_i = f exactly.
struct WeightSystem {
    std::vector<Rational> weights;
};

// Solves <w, a> = 1 over the support of f. Errors unless the solution exists,
// is unique, and is strictly positive.
WeightSystem infer_weights(const Polynomial& f);

// Standard-monomial basis of Q[x]/(df/dx_1, ..., df/dx_n) under grevlex.
// Errors when the Jacobian ideal is not zero-dimensional (the singularity is
// not isolated). Empty when f is nonsingular at the origin.
std::vector<Monomial> milnor_basis(const Polynomial& f);

struct SpectrumTable {
    std::map<Rational, int> entries; // exponent -> multiplicity, all in (0, n)
    int milnor_number = 0;
};

// Hodge spectrum of a quasi-homogeneous isolated singularity: exponents
// l(a) = sum_i (a_i + 1) w_i over the Milnor basis monomials x^a. Symmetric
// about n/2; total multiplicity is the Milnor number.
SpectrumTable hodge_spectrum(const Polynomial& f);

// Both sides of the spectrum / inner-jumping-multiplicity comparison at
// alpha in (0, 1], each computed by its own route.
struct SpectrumCheck {
    Rational alpha;
    int spectrum_value = 0;
    int inner_value = 0;
    bool equal = false;
};

SpectrumCheck check_spectrum_vs_inner(const Polynomial& f, const Rational& alpha);

} // namespace bsato
