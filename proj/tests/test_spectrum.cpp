#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bsato/bernstein.hpp"
#include "bsato/error.hpp"
#include "bsato/spectrum.hpp"

using namespace bsato;

namespace {

PolyRingPtr ring2() { return std::make_shared<PolyRing>(std::vector<std::string>{"x", "y"}); }

Polynomial cusp(const PolyRingPtr& r) {
    auto x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
    return x.pow(2) + y.pow(3);
}

Rational q(long n, long d) { return Rational(n) / Rational(d); }

} // namespace

TEST_CASE("weight inference on classical forms") {
    auto r = ring2();
    auto x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);

    auto w = infer_weights(cusp(r)).weights;
    REQUIRE(w.size() == 2);
    CHECK(w[0] == q(1, 2));
    CHECK(w[1] == q(1, 3));

    auto w2 = infer_weights(x.pow(2) + y.pow(2)).weights;
    CHECK(w2[0] == q(1, 2));
    CHECK(w2[1] == q(1, 2));

    // support {x^2, xy} pins both weights through the two equations
    auto w3 = infer_weights(x.pow(2) + x * y).weights;
    CHECK(w3[0] == q(1, 2));
    CHECK(w3[1] == q(1, 2));
}

TEST_CASE("weight inference rejections") {
    auto r = ring2();
    auto x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
    // x^2 + y^3 + y^2 admits no weight system at all
    CHECK_THROWS_AS(infer_weights(x.pow(2) + y.pow(3) + y.pow(2)), usage_error);
    // x^2 alone leaves the y weight undetermined
    CHECK_THROWS_AS(infer_weights(x.pow(2)), usage_error);
    // inconsistent: 2w = 1 and 4w = 1
    CHECK_THROWS_AS(infer_weights(x.pow(2) + x.pow(4)), usage_error);
    CHECK_THROWS_AS(infer_weights(Polynomial(r, Rational(3))), usage_error);
}

TEST_CASE("milnor basis of standard singularities") {
    auto r = ring2();
    auto x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);

    auto b = milnor_basis(cusp(r)); // jacobian (2x, 3y^2)
    REQUIRE(b.size() == 2);
    CHECK(b[0] == Monomial::one(2));
    CHECK(b[1] == Monomial({0, 1}));

    auto node = milnor_basis(x.pow(2) + y.pow(2));
    REQUIRE(node.size() == 1);
    CHECK(node[0] == Monomial::one(2));

    // xy(x+y): jacobian <2xy + y^2, x^2 + 2xy>, milnor number 4
    auto three_lines = milnor_basis(x.pow(2) * y + x * y.pow(2));
    CHECK(three_lines.size() == 4);

    // smooth point: empty basis, no error
    CHECK(milnor_basis(x + y.pow(5)).empty());

    // x^2 in two variables is not isolated
    CHECK_THROWS_AS(milnor_basis(x.pow(2)), usage_error);
    CHECK_THROWS_AS(milnor_basis(x * x * y * y), usage_error);
}

TEST_CASE("hodge spectrum of the cusp") {
    auto sp = hodge_spectrum(cusp(ring2()));
    CHECK(sp.milnor_number == 2);
    REQUIRE(sp.entries.size() == 2);
    CHECK(sp.entries.at(q(5, 6)) == 1);
    CHECK(sp.entries.at(q(7, 6)) == 1);
}

TEST_CASE("hodge spectrum goldens") {
    auto r = ring2();
    auto x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);

    auto node = hodge_spectrum(x.pow(2) + y.pow(2));
    CHECK(node.milnor_number == 1);
    CHECK(node.entries.at(q(1, 1)) == 1);

    auto e = hodge_spectrum(x.pow(3) + y.pow(3));
    CHECK(e.milnor_number == 4);
    CHECK(e.entries.at(q(2, 3)) == 1);
    CHECK(e.entries.at(q(1, 1)) == 2);
    CHECK(e.entries.at(q(4, 3)) == 1);

    auto r1 = std::make_shared<PolyRing>(std::vector<std::string>{"x"});
    auto just_x = hodge_spectrum(Polynomial::variable(r1, 0, 2));
    CHECK(just_x.milnor_number == 1);
    CHECK(just_x.entries.at(q(1, 2)) == 1);
}

TEST_CASE("spectrum minimum matches the b-function threshold") {
    auto r = ring2();
    auto x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
    for (const auto& f : {cusp(r), x.pow(2) + y.pow(2), x.pow(3) + y.pow(3)}) {
        auto sp = hodge_spectrum(f);
        Rational min_exp = sp.entries.begin()->first;
        if (min_exp <= Rational(1)) CHECK(min_exp == lct_from_bfunction(f));
    }
}

TEST_CASE("spectrum vs inner multiplicity") {
    auto r = ring2();
    auto x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);

    auto c1 = check_spectrum_vs_inner(cusp(r), q(5, 6));
    CHECK(c1.spectrum_value == 1);
    CHECK(c1.inner_value == 1);
    CHECK(c1.equal);

    auto c2 = check_spectrum_vs_inner(x.pow(2) + y.pow(2), q(1, 2));
    CHECK(c2.spectrum_value == 0);
    CHECK(c2.inner_value == 0);
    CHECK(c2.equal);

    // 1/2 is not a spectral exponent of the cusp and no monomial jumps there
    auto c3 = check_spectrum_vs_inner(cusp(r), q(1, 2));
    CHECK(c3.spectrum_value == 0);
    CHECK(c3.inner_value == 0);
    CHECK(c3.equal);

    // at alpha = 1 the jump acquires the divisor and stops being
    // point-supported, so the inner side refuses rather than miscounting
    CHECK_THROWS_AS(check_spectrum_vs_inner(x.pow(2) + y.pow(2), q(1, 1)), usage_error);
    CHECK_THROWS_AS(check_spectrum_vs_inner(cusp(r), q(7, 6)), usage_error);
    CHECK_THROWS_AS(check_spectrum_vs_inner(cusp(r), q(-1, 2)), usage_error);
}
