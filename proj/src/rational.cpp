#include "bsato/rational.hpp"

#include <ostream>

#include "bsato/error.hpp"

namespace bsato {

Rational::Rational(long n, long d) : v_(n, d) {
    check_usage(d != 0, "rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
    check_usage(d != 0, "rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(mpz_class(s));
        mpz_class n(s.substr(0, slash));
        mpz_class d(s.substr(slash + 1));
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw usage_error("cannot parse rational literal '" + s + "'");
    }
}

Rational& Rational::operator/=(const Rational& o) {
    check_usage(!o.is_zero(), "division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inv() const {
    check_usage(!is_zero(), "inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    mpq_class r(1);
    mpq_class base = v_;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r *= base;
        if (k > 1) base *= base;
    }
    return Rational(r);
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

mpz_class Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::string to_string(const Rational& r) { return r.str(); }

} // namespace bsato
