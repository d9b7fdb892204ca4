#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <string>

#include "bsato/bernstein.hpp"
#include "bsato/error.hpp"
#include "bsato/parse.hpp"

using namespace bsato;

namespace {

PolyRingPtr rxy() { return std::make_shared<PolyRing>(std::vector<std::string>{"x", "y"}); }

std::string usage_msg(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const usage_error& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("polynomial grammar") {
    auto r = rxy();
    auto x = Polynomial::variable(r, 0);
    auto y = Polynomial::variable(r, 1);

    CHECK(parse_polynomial("x^2+y^3", r) == x.pow(2) + y.pow(3));
    CHECK(parse_polynomial("(1/2)*x^2", r) == x.pow(2) * Rational(1, 2));
    CHECK(parse_polynomial("-x^2+3/4*y", r) == -x.pow(2) + y * Rational(3, 4));
    CHECK(parse_polynomial("x*(x+y)-y*y", r) == x.pow(2) + x * y - y.pow(2));
    CHECK(parse_polynomial("2*-x", r) == x * Rational(-2));
    CHECK(parse_polynomial(" 12 ", r) == Polynomial(r, Rational(12)));
    CHECK(parse_polynomial("x^0", r) == Polynomial(r, Rational(1)));
}

TEST_CASE("polynomial errors carry 1-based columns") {
    auto r = rxy();
    CHECK(usage_msg([&] { parse_polynomial("x^2 + z", r); }) ==
          "unknown identifier \"z\" at column 7");
    CHECK(usage_msg([&] { parse_polynomial("2x", r); }) ==
          "syntax error at column 2: unexpected 'x'");
    CHECK(usage_msg([&] { parse_polynomial("x/2", r); }) ==
          "syntax error at column 2: '/' is only allowed between integer literals");
    CHECK(usage_msg([&] { parse_polynomial("1/0", r); }) ==
          "syntax error at column 3: division by zero");
    CHECK(usage_msg([&] { parse_polynomial("x^(2)", r); }) ==
          "syntax error at column 3: expected an integer exponent after '^'");
    CHECK(usage_msg([&] { parse_polynomial("(x+y", r); }) ==
          "syntax error at column 5: expected ')'");
    CHECK(usage_msg([&] { parse_polynomial("", r); }) ==
          "syntax error at column 1: unexpected end of input");
    CHECK(usage_msg([&] { parse_polynomial("x$y", r); }) ==
          "syntax error at column 2: unexpected character '$'");
}

TEST_CASE("operator grammar multiplies in written order") {
    auto w = WeylRing::make({"x", "y"}, {"dx", "dy"}, {"s"});
    auto x = WeylElement::generator(w, 0);
    auto dx = WeylElement::generator(w, 2);
    auto s = WeylElement::generator(w, 4);

    CHECK(parse_weyl("dx*x", w) == normal_order_product(dx, x));
    CHECK(parse_weyl("dx*x", w) != normal_order_product(x, dx));
    CHECK(parse_weyl("dx^2*x - s", w) ==
          normal_order_product(normal_order_product(dx, dx), x) - s);
    CHECK(parse_weyl("(1/27)*dy^3", w) ==
          WeylElement::generator(w, 3, 3) * Rational(1, 27));
    CHECK(usage_msg([&] { parse_weyl("dz", w); }) ==
          "unknown identifier \"dz\" at column 1");

    // round-trip through the printed form
    auto p = normal_order_product(dx, normal_order_product(x, dx)) * Rational(-3, 4) + s;
    CHECK(parse_weyl(p.str(), w) == p);
}

TEST_CASE("b-polynomial display form round-trips") {
    UnivariatePoly expect({Rational(1)});
    for (Rational c : {Rational(1), Rational(5, 6), Rational(7, 6)})
        expect = expect * UnivariatePoly::linear_factor(c);
    CHECK(parse_bpoly("(s+1)(s+5/6)(s+7/6)") == expect);
    CHECK(parse_bpoly("(s+1)^2") ==
          UnivariatePoly::linear_factor(Rational(1)) * UnivariatePoly::linear_factor(Rational(1)));
    CHECK(parse_bpoly("s^2+2*s+1") == parse_bpoly("(s+1)(s+1)"));
    CHECK(parse_bpoly("0").is_zero());

    auto r = rxy();
    auto cusp = Polynomial::variable(r, 0, 2) + Polynomial::variable(r, 1, 3);
    auto bf = bernstein_sato(cusp);
    CHECK(parse_bpoly(bfunction_display(bf)) == bf.poly);
}

TEST_CASE("monomial lists") {
    auto r3 = std::make_shared<PolyRing>(std::vector<std::string>{"x1", "x2", "x3"});
    auto gens = parse_monomial_list("x1*x2,x2*x3,x1*x3", r3);
    REQUIRE(gens.size() == 3);
    CHECK(gens[0] == Monomial({1, 1, 0}));
    CHECK(gens[1] == Monomial({0, 1, 1}));
    CHECK(gens[2] == Monomial({1, 0, 1}));

    auto single = parse_monomial_list(" x1^2 * x3 ", r3);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == Monomial({2, 0, 1}));

    CHECK_THROWS_AS(parse_monomial_list("x1+x2", r3), usage_error);
    CHECK_THROWS_AS(parse_monomial_list("2*x1", r3), usage_error);
    CHECK_THROWS_AS(parse_monomial_list("x1,", r3), usage_error);
}
