#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bsato/fs_action.hpp"
#include "bsato/multiplier_table.hpp"
#include "bsato/polynomial.hpp"
#include "bsato/univariate.hpp"
#include "bsato/weyl.hpp"

namespace bsato {

// Generators of the annihilator of f^s in D[s]. The returned operators live
// in the ring with pairs (x_i, dx_i) named after f's variables plus the
// parameter s; every generator g satisfies apply_to_fs(g, f^s) = 0, which is
// asserted before returning.
std::vector<WeylElement> ann_fs(const Polynomial& f);

// b(s) prod f_j^{s_j} h = sum_j ops[j] (f_j h prod f_i^{s_i})
struct Certificate {
    std::vector<Polynomial> fs;
    Polynomial h;
    UnivariatePoly b;
    std::vector<WeylElement> ops;
};

struct VerifyResult {
    bool valid = false;
    std::string witness; // residual of the functional equation when invalid
};

VerifyResult verify_certificate(const Certificate& c);

// Monic generator of { b : b(s) h in Ann f^s + D[s] f h } with its
// functional-equation witness. roots carry the full linear factorization,
// which must succeed with all roots negative rational.
struct BFunction {
    Polynomial f;
    Polynomial h;
    UnivariatePoly poly;
    RootList roots;
    Certificate cert;
};

BFunction bernstein_sato(const Polynomial& f, const Polynomial& h);
BFunction bernstein_sato(const Polynomial& f);

// Independent route for h = 1: initial ideal of <t - f, d_i + f_i dt> under
// the (t:-1, dt:+1) weight, adjusted to weight zero and intersected with the
// polynomials in theta = t dt; returns the monic image under theta = -s-1.
UnivariatePoly bfunction_via_initial_ideal(const Polynomial& f);

// min{ c : b_{f,h}(-c) = 0 }: the V-filtration jump of h along f.
Rational jump_alpha(const BFunction& b);

// -(largest root of b_{f,1}); in (0, 1] for any hypersurface.
Rational lct_from_bfunction(const Polynomial& f);

// h in J(alpha Z) iff alpha < jump_alpha(b_{f,h}).
bool multiplier_membership(const Polynomial& f, const Polynomial& h, const Rational& alpha);

// Jump values of all monomials up to degree_bound, with the induced jump
// table of V^alpha on (0, alpha_max]. entries are ordered by (degree, lex
// with earlier variables first); table rows list the monomial ideal right
// after each jump (minimal generators). complete means no monomial of top
// degree falls in the alpha range, so every listed ideal is fully determined
// within the truncation.
struct VFiltTable {
    std::vector<std::pair<Monomial, Rational>> entries;
    MultiplierTable table;
    bool complete = false;
};

VFiltTable v_filtration_table(const Polynomial& f, int degree_bound, const Rational& alpha_max,
                              int threads = 1);

// Number of monomials whose jump along f equals alpha exactly. Requires a
// quasi-homogeneous f with an isolated singularity at the origin (those make
// V^alpha monomial, so the count is the inner jumping multiplicity
// dim V^alpha / V^{>alpha}); anything else is a usage error.
int inner_jumping_principal(const Polynomial& f, const Rational& alpha);

// Factored display, e.g. "(s+1)(s+5/6)(s+7/6)": the (s+1) factor first when
// present, the rest by increasing constant.
std::string bfunction_display(const BFunction& b);

} // namespace bsato
