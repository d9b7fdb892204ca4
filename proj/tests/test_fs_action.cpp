#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bsato/error.hpp"
#include "bsato/fs_action.hpp"

using namespace bsato;

namespace {

struct OneVar {
    PolyRingPtr pring = std::make_shared<PolyRing>(std::vector<std::string>{"x", "s"});
    WeylRingPtr wring = WeylRing::make({"x"}, {"dx"}, {"s"});
    Polynomial x = Polynomial::variable(pring, 0);
    Polynomial s = Polynomial::variable(pring, 1);
};

WeylElement wgen(const WeylRingPtr& r, const std::string& name, int e = 1) {
    return WeylElement::generator(r, r->find(name), e);
}

} // namespace

TEST_CASE("derivative of x^s") {
    OneVar v;
    auto base = FsElement::power(v.pring, 1, {v.x});
    auto dv = apply_to_fs(wgen(v.wring, "dx"), base);
    CHECK(dv == FsElement(v.pring, 1, {v.x}, v.s, {1}));
    CHECK(dv.str() == "(s) / (x) * (x)^s");
    // x dx x^s = s x^s
    auto xdx = apply_to_fs(wgen(v.wring, "x") * wgen(v.wring, "dx"), base);
    CHECK(xdx == FsElement(v.pring, 1, {v.x}, v.s, {0}));
}

TEST_CASE("classical annihilators act by zero") {
    OneVar v;
    auto base = FsElement::power(v.pring, 1, {v.x});
    auto ann = wgen(v.wring, "x") * wgen(v.wring, "dx") - wgen(v.wring, "s");
    CHECK(apply_to_fs(ann, base).is_zero());

    // Euler relation for x^2 + y^3: (3 x dx + 2 y dy - 6 s) kills f^s.
    auto pr = std::make_shared<PolyRing>(std::vector<std::string>{"x", "y", "s"});
    auto wr = WeylRing::make({"x", "y"}, {"dx", "dy"}, {"s"});
    auto f = Polynomial::variable(pr, 0, 2) + Polynomial::variable(pr, 1, 3);
    auto cusp = FsElement::power(pr, 2, {f});
    auto euler = Rational(3) * (wgen(wr, "x") * wgen(wr, "dx")) +
                 Rational(2) * (wgen(wr, "y") * wgen(wr, "dy")) -
                 Rational(6) * wgen(wr, "s");
    CHECK(apply_to_fs(euler, cusp).is_zero());
    CHECK(!apply_to_fs(euler + WeylElement(wr, Rational(1)), cusp).is_zero());
}

TEST_CASE("several factors: functional equation of the coordinate pair") {
    auto pr = std::make_shared<PolyRing>(std::vector<std::string>{"x", "y", "s1", "s2"});
    auto wr = WeylRing::make({"x", "y"}, {"dx", "dy"}, {"s1", "s2"});
    auto X = Polynomial::variable(pr, 0), Y = Polynomial::variable(pr, 1);
    auto S1 = Polynomial::variable(pr, 2), S2 = Polynomial::variable(pr, 3);
    auto base = FsElement::power(pr, 2, {X, Y});

    // dx (x f^s) = (s1 + 1) f^s, and the two together give b(s) = s + 2 at
    // s = s1 + s2.
    FsElement xv = base;
    xv.mul_poly(X);
    auto lhs = apply_to_fs(wgen(wr, "dx"), xv);
    FsElement expect = base;
    expect.mul_poly(S1 + Polynomial(pr, Rational(1)));
    CHECK(lhs == expect);

    FsElement yv = base;
    yv.mul_poly(Y);
    auto both = lhs + apply_to_fs(wgen(wr, "dy"), yv);
    FsElement rhs = base;
    rhs.mul_poly(S1 + S2 + Polynomial(pr, Rational(2)));
    CHECK(both == rhs);
}

TEST_CASE("shift generators") {
    auto pr = std::make_shared<PolyRing>(std::vector<std::string>{"x", "y", "s1", "s2"});
    auto wr = WeylRing::make({"x", "y"}, {"dx", "dy"}, {"s1", "s2", "s12"});
    auto X = Polynomial::variable(pr, 0), Y = Polynomial::variable(pr, 1);
    auto S1 = Polynomial::variable(pr, 2);
    auto base = FsElement::power(pr, 2, {X, Y});

    // s_{12} x^{s1} y^{s2} = s1 y / x * x^{s1} y^{s2}
    auto moved = apply_to_fs(wgen(wr, "s12"), base);
    CHECK(moved == FsElement(pr, 2, {X, Y}, S1 * Y, {1, 0}));

    // t then t^{-1} is the identity.
    std::mt19937 rng(55);
    std::uniform_int_distribution<int> cf(-3, 3), ex(0, 2);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial n(pr);
        for (int t = 0; t < 3; ++t) {
            Monomial m = Monomial::one(4);
            for (int k = 0; k < 4; ++k) m.e[k] = ex(rng);
            n.add_term(m, Rational(cf(rng)));
        }
        FsElement w(pr, 2, {X, Y}, n, {(unsigned)trial % 2, 1});
        FsElement u = w;
        u.apply_t(0);
        u.apply_t_inv(0);
        CHECK(u == w);
        u.apply_t_inv(1);
        u.apply_t(1);
        CHECK(u == w);
    }
}

TEST_CASE("action is a module action (seeded random, shift-free)") {
    auto pr = std::make_shared<PolyRing>(std::vector<std::string>{"x", "y", "s1", "s2"});
    auto wr = WeylRing::make({"x", "y"}, {"dx", "dy"}, {"s1", "s2"});
    auto X = Polynomial::variable(pr, 0), Y = Polynomial::variable(pr, 1);
    std::vector<Polynomial> fs = {X + Y * Y, Y};
    auto base = FsElement::power(pr, 2, fs);

    std::mt19937 rng(2718);
    std::uniform_int_distribution<int> nt(1, 2), ex(0, 2), cf(-2, 2);
    auto rnd = [&] {
        WeylElement out(wr);
        int k = nt(rng);
        for (int t = 0; t < k; ++t) {
            Monomial m = Monomial::one(wr->nslots());
            for (int s = 0; s < wr->nslots(); ++s) m.e[s] = ex(rng);
            out.add_term(m, Rational(cf(rng)));
        }
        return out;
    };
    for (int trial = 0; trial < 15; ++trial) {
        auto a = rnd(), b = rnd();
        CHECK(apply_to_fs(a * b, base) == apply_to_fs(a, apply_to_fs(b, base)));
        CHECK(apply_to_fs(a + b, base) == apply_to_fs(a, base) + apply_to_fs(b, base));
    }
}

TEST_CASE("rejects operators without an action") {
    OneVar v;
    auto base = FsElement::power(v.pring, 1, {v.x});
    auto wu = WeylRing::make({"x"}, {"dx"}, {"u"});
    CHECK_THROWS_AS(apply_to_fs(wgen(wu, "u"), base), usage_error);
    auto w3 = WeylRing::make({"x"}, {"dx"}, {"s13"});
    CHECK_THROWS_AS(apply_to_fs(wgen(w3, "s13"), base), usage_error);
    CHECK_THROWS_AS(FsElement(v.pring, 1, {v.s}, v.x, {0}), usage_error);
}
