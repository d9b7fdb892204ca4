#include "bsato/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "bsato/error.hpp"

namespace bsato {

PolyRing::PolyRing(std::vector<std::string> vars) : vars_(std::move(vars)) {
    for (size_t i = 0; i < vars_.size(); ++i) {
        check_usage(!vars_[i].empty(), "empty variable name");
        for (size_t j = i + 1; j < vars_.size(); ++j)
            check_usage(vars_[i] != vars_[j], "duplicate variable name '" + vars_[i] + "'");
    }
}

int PolyRing::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return (int)i;
    return -1;
}

Polynomial::Polynomial(PolyRingPtr ring, const Rational& c) : ring_(std::move(ring)) {
    if (!c.is_zero()) terms_[Monomial::one(ring_->nvars())] = c;
}

Polynomial Polynomial::variable(PolyRingPtr ring, int idx, int exp) {
    check_internal(idx >= 0 && idx < ring->nvars(), "variable index out of range");
    Monomial m = Monomial::one(ring->nvars());
    m.e[idx] = exp;
    return monomial(std::move(ring), m);
}

Polynomial Polynomial::monomial(PolyRingPtr ring, const Monomial& m, const Rational& c) {
    Polynomial p(std::move(ring));
    check_internal(m.nvars() == p.ring_->nvars(), "monomial arity mismatch");
    if (!c.is_zero()) p.terms_[m] = c;
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
    auto it = terms_.find(Monomial::one(ring_->nvars()));
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.deg());
    return d;
}

std::pair<Monomial, Rational> Polynomial::sole_term() const {
    check_internal(terms_.size() == 1, "sole_term on non-monomial");
    return *terms_.begin();
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::require_same_ring(const Polynomial& o) const {
    check_internal(ring_ && o.ring_, "polynomial without ring");
    check_internal(ring_ == o.ring_ || ring_->vars() == o.ring_->vars(),
                   "polynomial ring mismatch");
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_ring(b);
    Polynomial r(a.ring_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    a.require_same_ring(b);
    return a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(int e) const {
    check_usage(e >= 0, "negative polynomial power");
    Polynomial r(ring_, Rational(1));
    Polynomial base = *this;
    for (int k = e; k > 0; k >>= 1) {
        if (k & 1) r = r * base;
        if (k > 1) base = base * base;
    }
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    check_internal(var >= 0 && var < ring_->nvars(), "variable index out of range");
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
        if (m.e[var] == 0) continue;
        Monomial d = m;
        d.e[var] -= 1;
        r.add_term(d, c * Rational(m.e[var]));
    }
    return r;
}

Polynomial Polynomial::shift_var(int var, const Rational& delta) const {
    check_internal(var >= 0 && var < ring_->nvars(), "variable index out of range");
    if (delta.is_zero()) return *this;
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
        int e = m.e[var];
        // (v + delta)^e expanded binomially.
        Rational binom(1);
        Rational dpow(1);
        for (int k = 0; k <= e; ++k) {
            Monomial t = m;
            t.e[var] = e - k;
            r.add_term(t, c * binom * dpow);
            binom *= Rational(e - k);
            binom /= Rational(k + 1);
            dpow *= delta;
        }
    }
    return r;
}

const Monomial& Polynomial::leading_monomial(MonomialOrder ord) const {
    check_internal(!terms_.empty(), "leading term of zero polynomial");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : terms_)
        if (!best || cmp_monomial(*best, m, ord) < 0) best = &m;
    return *best;
}

Rational Polynomial::leading_coeff(MonomialOrder ord) const {
    return terms_.at(leading_monomial(ord));
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    // Display largest grevlex term first.
    std::vector<const std::pair<const Monomial, Rational>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
        return cmp_monomial(a->first, b->first, MonomialOrder::grevlex) > 0;
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        const auto& [m, c] = *t;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (m.is_one()) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << monomial_str(m, ring_->vars());
        }
    }
    return os.str();
}

std::optional<Polynomial> try_divide(const Polynomial& p, const Polynomial& divisor) {
    check_usage(!divisor.is_zero(), "division by zero polynomial");
    const MonomialOrder ord = MonomialOrder::grevlex;
    Polynomial rem = p;
    Polynomial quot(p.ring());
    const Monomial dlm = divisor.leading_monomial(ord);
    const Rational dlc = divisor.leading_coeff(ord);
    while (!rem.is_zero()) {
        const Monomial& rlm = rem.leading_monomial(ord);
        if (!dlm.divides(rlm)) return std::nullopt;
        Monomial q = rlm / dlm;
        Rational qc = rem.leading_coeff(ord) / dlc;
        Polynomial qt = Polynomial::monomial(p.ring(), q, qc);
        quot += qt;
        rem -= qt * divisor;
    }
    return quot;
}

} // namespace bsato
