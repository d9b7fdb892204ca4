#include "bsato/monomial.hpp"

#include <algorithm>

#include "bsato/error.hpp"

namespace bsato {

int Monomial::deg() const {
    int d = 0;
    for (int k : e) d += k;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

bool Monomial::divides(const Monomial& m) const {
    if (e.size() != m.e.size()) return false;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > m.e[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
    check_internal(e.size() == m.e.size(), "monomial arity mismatch");
    Monomial r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& m) const {
    check_internal(m.divides(*this), "monomial division not exact");
    Monomial r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    check_internal(a.e.size() == b.e.size(), "monomial arity mismatch");
    Monomial r = a;
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    check_internal(a.e.size() == b.e.size(), "monomial arity mismatch");
    Monomial r = a;
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::min(a.e[i], b.e[i]);
    return r;
}

bool Monomial::coprime(const Monomial& m) const {
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0 && m.e[i] > 0) return false;
    return true;
}

int cmp_monomial(const Monomial& a, const Monomial& b, MonomialOrder ord) {
    check_internal(a.e.size() == b.e.size(), "monomial arity mismatch");
    switch (ord) {
    case MonomialOrder::lex:
        for (size_t i = 0; i < a.e.size(); ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
        return 0;
    case MonomialOrder::grevlex: {
        int da = a.deg(), db = b.deg();
        if (da != db) return da < db ? -1 : 1;
        for (size_t i = a.e.size(); i-- > 0;)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        return 0;
    }
    }
    return 0;
}

std::string monomial_str(const Monomial& m, const std::vector<std::string>& names) {
    check_internal(names.size() == m.e.size(), "name list arity mismatch");
    std::string s;
    for (size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (m.e[i] != 1) s += "^" + std::to_string(m.e[i]);
    }
    return s.empty() ? "1" : s;
}

} // namespace bsato
