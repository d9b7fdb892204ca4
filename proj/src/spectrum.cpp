#include "bsato/spectrum.hpp"

#include "bsato/bernstein.hpp"
#include "bsato/error.hpp"
#include "bsato/groebner.hpp"
#include "bsato/linalg.hpp"

namespace bsato {

WeightSystem infer_weights(const Polynomial& f) {
    check_usage(f.ring() != nullptr && !f.is_zero(), "f must be nonzero");
    int n = f.ring()->nvars();
    Matrix a;
    std::vector<Rational> rhs;
    for (const auto& [m, c] : f.terms()) {
        std::vector<Rational> row;
        for (int i = 0; i < n; ++i) row.emplace_back(m.e[i]);
        a.push_back(std::move(row));
        rhs.emplace_back(1);
    }
    auto sol = solve_linear(std::move(a), std::move(rhs));
    check_usage(sol.status == SolveStatus::unique, "no positive weight system");
    for (const auto& w : sol.solution)
        check_usage(w > Rational(0), "no positive weight system");

    // Euler identity sum w_i x_i df/dx_i = f must hold exactly.
    Polynomial euler(f.ring());
    for (int i = 0; i < n; ++i)
        euler += sol.solution[i] * (Polynomial::variable(f.ring(), i) * f.derivative(i));
    check_internal(euler == f, "weight system fails the Euler identity");
    return WeightSystem{sol.solution};
}

std::vector<Monomial> milnor_basis(const Polynomial& f) {
    check_usage(f.ring() != nullptr && !f.is_constant(), "f must be nonconstant");
    std::vector<Polynomial> jac;
    for (int i = 0; i < f.ring()->nvars(); ++i) {
        auto d = f.derivative(i);
        if (!d.is_zero()) jac.push_back(d);
    }
    check_usage(!jac.empty(), "zero Jacobian ideal: the singularity is not isolated");
    auto gb = poly_groebner(jac, MonomialOrder::grevlex);
    auto basis = standard_monomials(gb, MonomialOrder::grevlex);
    check_usage(basis.has_value(), "the singularity is not isolated");
    return *basis;
}

SpectrumTable hodge_spectrum(const Polynomial& f) {
    auto ws = infer_weights(f);
    auto basis = milnor_basis(f);
    int n = f.ring()->nvars();
    SpectrumTable out;
    out.milnor_number = (int)basis.size();
    for (const auto& a : basis) {
        Rational l(0);
        for (int i = 0; i < n; ++i) l += ws.weights[i] * Rational(a.e[i] + 1);
        out.entries[l] += 1;
    }
    Rational dim(n);
    for (const auto& [alpha, mult] : out.entries) {
        check_internal(alpha > Rational(0) && alpha < dim, "spectrum exponent out of range");
        auto mirror = out.entries.find(dim - alpha);
        check_internal(mirror != out.entries.end() && mirror->second == mult,
                       "spectrum symmetry violated");
    }
    return out;
}

SpectrumCheck check_spectrum_vs_inner(const Polynomial& f, const Rational& alpha) {
    check_usage(alpha > Rational(0) && alpha <= Rational(1),
                "the comparison is stated for alpha in (0, 1]");
    auto table = hodge_spectrum(f);
    SpectrumCheck out;
    out.alpha = alpha;
    auto it = table.entries.find(alpha);
    out.spectrum_value = it == table.entries.end() ? 0 : it->second;
    out.inner_value = inner_jumping_principal(f, alpha);
    out.equal = out.spectrum_value == out.inner_value;
    return out;
}

} // namespace bsato
