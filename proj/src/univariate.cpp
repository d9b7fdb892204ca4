#include "bsato/univariate.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "bsato/error.hpp"

namespace bsato {

UnivariatePoly::UnivariatePoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UnivariatePoly UnivariatePoly::constant(const Rational& c) {
    return UnivariatePoly(std::vector<Rational>{c});
}

UnivariatePoly UnivariatePoly::linear_factor(const Rational& c) {
    return UnivariatePoly({c, Rational(1)});
}

void UnivariatePoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UnivariatePoly::leading() const {
    check_internal(!c_.empty(), "leading coefficient of zero polynomial");
    return c_.back();
}

UnivariatePoly UnivariatePoly::operator-() const {
    UnivariatePoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UnivariatePoly(std::move(c));
}

UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b) { return a + (-b); }

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::operator*(const Rational& s) const {
    UnivariatePoly r = *this;
    for (auto& c : r.c_) c *= s;
    r.trim();
    return r;
}

Rational UnivariatePoly::operator()(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

UnivariatePoly UnivariatePoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational((long)i);
    return UnivariatePoly(std::move(d));
}

UnivariatePoly UnivariatePoly::monic() const {
    check_internal(!is_zero(), "monic of zero polynomial");
    return *this * leading().inv();
}

UnivariatePoly UnivariatePoly::deflate(const Rational& root) const {
    check_internal(degree() >= 1, "deflating constant polynomial");
    // Synthetic division by (x - root).
    std::vector<Rational> q(c_.size() - 1);
    Rational carry = c_.back();
    for (size_t i = c_.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = c_[i] + carry * root;
    }
    check_internal(carry.is_zero(), "deflate at non-root");
    return UnivariatePoly(std::move(q));
}

bool UnivariatePoly::divisible_by(const UnivariatePoly& d) const {
    check_usage(!d.is_zero(), "division by zero polynomial");
    std::vector<Rational> r = c_;
    int dd = d.degree();
    Rational dl = d.leading();
    while ((int)r.size() - 1 >= dd) {
        Rational f = r.back() / dl;
        int shift = (int)r.size() - 1 - dd;
        for (int i = 0; i <= dd; ++i) r[shift + i] -= f * d.c_[i];
        while (!r.empty() && r.back().is_zero()) r.pop_back();
        if (r.empty()) return true;
    }
    return r.empty();
}

std::vector<mpz_class> UnivariatePoly::primitive_integer_form() const {
    check_internal(!is_zero(), "primitive form of zero polynomial");
    mpz_class den_lcm(1);
    for (const auto& c : c_) {
        mpz_class d = c.den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    std::vector<mpz_class> z(c_.size());
    mpz_class content(0);
    for (size_t i = 0; i < c_.size(); ++i) {
        z[i] = c_[i].num() * (den_lcm / c_[i].den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z[i].get_mpz_t());
    }
    if (content > 1)
        for (auto& v : z) v /= content;
    if (z.back() < 0)
        for (auto& v : z) v = -v;
    return z;
}

std::string UnivariatePoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        Rational a = c_[i].abs();
        if (first) {
            if (c_[i].sign() < 0) os << "-";
            first = false;
        } else {
            os << (c_[i].sign() < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

// Miller-Rabin says "probably prime"; good enough to direct Pollard rho.
bool probably_prime(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

mpz_class pollard_rho(const mpz_class& n) {
    // n odd composite, not a prime power of interest; returns a nontrivial factor.
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xb5a70ul); // fixed seed: deterministic runs
    while (true) {
        mpz_class x = rng.get_z_range(n - 2) + 2;
        mpz_class y = x;
        mpz_class c = rng.get_z_range(n - 1) + 1;
        mpz_class d(1);
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(mpz_class n, std::map<mpz_class, int>& out) {
    if (n <= 1) return;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (n % p == 0) {
            out[p] += 1;
            n /= p;
        }
    }
    // Trial division by 6k±1 up to 1e6, then rho on what is left.
    for (mpz_class p = 17; p * p <= n && p < 1000000; p += 2) {
        while (n % p == 0) {
            out[p] += 1;
            n /= p;
        }
    }
    if (n == 1) return;
    if (probably_prime(n)) {
        out[n] += 1;
        return;
    }
    mpz_class d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

std::vector<mpz_class> divisors_from_factors(const std::map<mpz_class, int>& f) {
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : f) {
        size_t base = divs.size();
        check_internal(base * (e + 1) <= 2000000, "divisor enumeration exceeds cap");
        mpz_class pk(1);
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
    check_usage(n != 0, "divisors of zero");
    std::map<mpz_class, int> f;
    factor_into(::abs(n), f);
    return divisors_from_factors(f);
}

RootList rational_roots(const UnivariatePoly& p) {
    check_usage(!p.is_zero(), "roots of the zero polynomial");
    RootList out;
    UnivariatePoly rem = p;
    // Strip the power of x first: x = 0 roots.
    int zero_mult = 0;
    while (rem.degree() >= 1 && rem.coeff(0).is_zero()) {
        rem = rem.deflate(Rational(0));
        ++zero_mult;
    }
    if (zero_mult > 0) out.roots.push_back({Rational(0), zero_mult});
    if (rem.degree() >= 1) {
        std::vector<mpz_class> z = rem.primitive_integer_form();
        std::vector<mpz_class> ps = positive_divisors(z.front());
        std::vector<mpz_class> qs = positive_divisors(z.back());
        std::vector<Rational> candidates;
        for (const auto& pn : ps)
            for (const auto& qd : qs) {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), pn.get_mpz_t(), qd.get_mpz_t());
                if (g != 1) continue; // non-reduced duplicates are skipped
                candidates.push_back(Rational(pn, qd));
                candidates.push_back(Rational(-pn, qd));
            }
        std::sort(candidates.begin(), candidates.end());
        for (const auto& r : candidates) {
            int mult = 0;
            while (rem.degree() >= 1 && rem(r).is_zero()) {
                rem = rem.deflate(r);
                ++mult;
            }
            if (mult > 0) out.roots.push_back({r, mult});
        }
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.cofactor = rem;
    return out;
}

} // namespace bsato
