// End-to-end acceptance run. One PASS/FAIL line per criterion; wall-clock
// limits are part of the criterion where stated. Exit code is the number of
// failed criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "bsato/bernstein.hpp"
#include "bsato/driver.hpp"
#include "bsato/error.hpp"
#include "bsato/fs_action.hpp"
#include "bsato/newton.hpp"
#include "bsato/parse.hpp"
#include "bsato/spectrum.hpp"

using namespace bsato;

namespace {

struct Result {
    bool ok = true;
    std::string detail;
    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct Criterion {
    std::string label;
    double limit_s; // 0 means no wall-clock requirement
    std::function<void(Result&)> body;
};

PolyRingPtr ring(std::vector<std::string> names) {
    return std::make_shared<PolyRing>(std::move(names));
}

Monomial mono(std::vector<int> e) {
    Monomial m;
    m.e = std::move(e);
    return m;
}

MonomialIdeal pairs3() {
    return monomial_ideal(3, {mono({1, 1, 0}), mono({0, 1, 1}), mono({1, 0, 1})});
}

std::string gens_str(const std::vector<Monomial>& gens, const std::vector<std::string>& names) {
    std::string out;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) out += ",";
        out += monomial_str(gens[i], names);
    }
    return out;
}

const char* CUSP_WITNESS = "(3/4*y^3*s + 3/2*x^2*s^2 + 3/4*y^3 + 9/4*x^2*s + 3/4*x^2)"
                           " / (y^3 + x^2) * (y^3 + x^2)^s";

void c1_cusp_bfunction(Result& r) {
    auto b = bernstein_sato(parse_polynomial("x^2+y^3", ring({"x", "y"})));
    r.expect(bfunction_display(b) == "(s+1)(s+5/6)(s+7/6)",
             "display came out as " + bfunction_display(b));
}

void c2_cusp_certificate(Result& r) {
    auto rg = ring({"x", "y"});
    auto wr = WeylRing::make({"x", "y"}, {"dx", "dy"}, {"s"});
    Certificate cert;
    cert.fs = {parse_polynomial("x^2+y^3", rg)};
    cert.h = Polynomial(rg, Rational(1));
    cert.b = parse_bpoly("(s+1)(s+5/6)(s+7/6)");
    cert.ops = {parse_weyl("(1/27)*dy^3+(1/6)*y*dx^2*dy+(1/8)*x*dx^3+(3/8)*dx^2", wr)};
    r.expect(verify_certificate(cert).valid, "four-term operator did not verify");

    Certificate broken = cert;
    broken.ops = {parse_weyl("(1/27)*dy^3+(1/6)*y*dx^2*dy+(1/8)*x*dx^3", wr)};
    auto vr = verify_certificate(broken);
    r.expect(!vr.valid, "three-term operator was accepted");
    r.expect(vr.witness == CUSP_WITNESS, "witness came out as " + vr.witness);
}

void c3_monomial_route(Result& r) {
    auto a = pairs3();
    r.expect(lct_monomial(a) == Rational(3, 2), "lct of the pairwise products is not 3/2");

    auto t = jumping_numbers_monomial(a, Rational(2), 2);
    r.expect(t.rows.size() == 2, "expected exactly two jumps up to 2");
    if (t.rows.size() == 2) {
        std::vector<std::string> names{"x1", "x2", "x3"};
        r.expect(t.rows[0].alpha == Rational(3, 2) &&
                     gens_str(t.rows[0].gens, names) == "x1,x2,x3",
                 "first row is " + t.rows[0].alpha.str() + ": " +
                     gens_str(t.rows[0].gens, names));
        r.expect(t.rows[1].alpha == Rational(2) &&
                     gens_str(t.rows[1].gens, names) == "x1*x2,x1*x3,x2*x3",
                 "second row is " + t.rows[1].alpha.str() + ": " +
                     gens_str(t.rows[1].gens, names));
    }

    for (const Rational& alpha : {Rational(1, 2), Rational(1), Rational(149, 100)}) {
        auto slice = multiplier_ideal_monomial(a, alpha, 2);
        r.expect(slice.size() == 10, "ideal below the threshold lost monomials at alpha = " +
                                         alpha.str());
    }
}

void c4_principal_route(Result& r) {
    auto f = parse_polynomial("x^2+y^3", ring({"x", "y"}));
    auto vt = v_filtration_table(f, 2, Rational(1), 1);
    const std::vector<std::pair<std::vector<int>, Rational>> want = {
        {{0, 0}, Rational(5, 6)}, {{1, 0}, Rational(1)},    {{0, 1}, Rational(1)},
        {{2, 0}, Rational(1)},    {{1, 1}, Rational(1)},    {{0, 2}, Rational(1)},
    };
    r.expect(vt.entries.size() == want.size(), "expected six jump values");
    for (size_t i = 0; i < want.size() && i < vt.entries.size(); ++i) {
        r.expect(vt.entries[i].first == mono(want[i].first) &&
                     vt.entries[i].second == want[i].second,
                 "entry " + std::to_string(i) + " is " +
                     monomial_str(vt.entries[i].first, {"x", "y"}) + " -> " +
                     vt.entries[i].second.str());
    }
    // table: full ring below 5/6, the maximal ideal on [5/6, 1)
    r.expect(vt.table.rows.size() == 2 && vt.table.rows[0].alpha == Rational(5, 6) &&
                 gens_str(vt.table.rows[0].gens, {"x", "y"}) == "x,y" &&
                 vt.table.rows[1].alpha == Rational(1) && vt.table.rows[1].gens.empty(),
             "jump rows do not show full -> maximal -> multiples of f");

    Polynomial one(f.ring(), Rational(1));
    auto x = parse_polynomial("x", f.ring());
    auto y = parse_polynomial("y", f.ring());
    r.expect(multiplier_membership(f, one, Rational(1, 2)), "1 left the ideal before 5/6");
    r.expect(multiplier_membership(f, one, Rational(5, 6) - Rational(1, 100)),
             "1 left the ideal before 5/6");
    r.expect(!multiplier_membership(f, one, Rational(5, 6)), "1 survived at 5/6");
    r.expect(multiplier_membership(f, x, Rational(5, 6)), "x fell out at 5/6");
    r.expect(multiplier_membership(f, y, Rational(99, 100)), "y fell out before 1");
    r.expect(!multiplier_membership(f, x, Rational(1)), "x survived at 1");
}

void c5_cusp_spectrum(Result& r) {
    auto sp = hodge_spectrum(parse_polynomial("x^2+y^3", ring({"x", "y"})));
    r.expect(sp.milnor_number == 2, "milnor number is not 2");
    r.expect(sp.entries.size() == 2 && sp.entries.count(Rational(5, 6)) &&
                 sp.entries.at(Rational(5, 6)) == 1 && sp.entries.count(Rational(7, 6)) &&
                 sp.entries.at(Rational(7, 6)) == 1,
             "spectrum is not {5/6, 7/6} with multiplicity one each");
}

void c6_spectrum_vs_inner(Result& r) {
    auto f = parse_polynomial("x^2+y^3", ring({"x", "y"}));
    auto at_jump = check_spectrum_vs_inner(f, Rational(5, 6));
    r.expect(at_jump.spectrum_value == 1 && at_jump.inner_value == 1 && at_jump.equal,
             "at 5/6: spectrum " + std::to_string(at_jump.spectrum_value) + ", inner " +
                 std::to_string(at_jump.inner_value));
    auto off_jump = check_spectrum_vs_inner(f, Rational(1, 2));
    r.expect(off_jump.spectrum_value == 0 && off_jump.inner_value == 0 && off_jump.equal,
             "at 1/2: spectrum " + std::to_string(off_jump.spectrum_value) + ", inner " +
                 std::to_string(off_jump.inner_value));
}

void c7_textbook_equations(Result& r) {
    auto bx = bernstein_sato(parse_polynomial("x", ring({"x"})));
    r.expect(bfunction_display(bx) == "(s+1)", "b(x) is " + bfunction_display(bx));
    r.expect(bx.cert.ops.size() == 1 && bx.cert.ops[0].str() == "dx",
             "certificate for x is not the bare derivative");

    auto bx2 = bernstein_sato(parse_polynomial("x^2", ring({"x"})));
    r.expect(bfunction_display(bx2) == "(s+1)(s+1/2)", "b(x^2) is " + bfunction_display(bx2));
    r.expect(bx2.cert.ops.size() == 1 && bx2.cert.ops[0].str() == "1/4*dx^2",
             "certificate for x^2 is not dx^2/4");

    auto q4 = bernstein_sato(
        parse_polynomial("x1^2+x2^2+x3^2+x4^2", ring({"x1", "x2", "x3", "x4"})));
    r.expect(bfunction_display(q4) == "(s+1)(s+2)",
             "b of the four-square form is " + bfunction_display(q4));
    r.expect(q4.cert.ops.size() == 1 &&
                 q4.cert.ops[0].str() ==
                     "1/4*dx1^2 + 1/4*dx2^2 + 1/4*dx3^2 + 1/4*dx4^2",
             "certificate is not the quarter Laplacian: " +
                 (q4.cert.ops.empty() ? std::string("(none)") : q4.cert.ops[0].str()));
    r.expect(verify_certificate(q4.cert).valid, "four-square certificate failed to verify");

    // two-factor equation (s1+s2+2) x^{s1} y^{s2} = dx x^{s1+1} y^{s2} + dy x^{s1} y^{s2+1}
    auto rg = ring({"x", "y"});
    auto wr = WeylRing::make({"x", "y"}, {"dx", "dy"}, {"s1", "s2"});
    Certificate two;
    two.fs = {parse_polynomial("x", rg), parse_polynomial("y", rg)};
    two.h = Polynomial(rg, Rational(1));
    two.b = parse_bpoly("s+2");
    two.ops = {parse_weyl("dx", wr), parse_weyl("dy", wr)};
    r.expect(verify_certificate(two).valid, "two-factor certificate failed to verify");
}

void c8_property_sweep(Result& r) {
    // annihilator generators really annihilate
    const std::vector<std::pair<std::vector<std::string>, std::string>> corpus = {
        {{"x"}, "x"},           {{"x"}, "x^2"},          {{"x", "y"}, "x*y"},
        {{"x", "y"}, "x^2+y^2"}, {{"x", "y"}, "x^2+y^3"}, {{"x", "y"}, "x^3+y^3"},
    };
    for (const auto& [vars, src] : corpus) {
        auto base = ring(vars);
        auto ext_names = vars;
        ext_names.push_back("s");
        auto ext = ring(ext_names);
        auto f_ext = parse_polynomial(src, ext);
        auto fs = FsElement::power(ext, (int)vars.size(), {f_ext});
        for (const auto& g : ann_fs(parse_polynomial(src, base)))
            r.expect(apply_to_fs(g, fs).is_zero(),
                     "annihilator generator " + g.str() + " does not kill (" + src + ")^s");
    }

    // jump tables move strictly and respect multiplication by the input
    auto t = jumping_numbers_monomial(pairs3(), Rational(3), 3);
    r.expect(t.rows.size() >= 3, "pairwise products show fewer than three jumps up to 3");
    for (size_t i = 0; i + 1 < t.rows.size(); ++i)
        r.expect(t.rows[i].alpha < t.rows[i + 1].alpha, "jump values not strictly increasing");
    std::vector<std::vector<Monomial>> slices;
    for (const auto& row : t.rows)
        slices.push_back(multiplier_ideal_monomial(pairs3(), row.alpha, 3));
    for (size_t i = 0; i + 1 < slices.size(); ++i) {
        r.expect(slices[i].size() > slices[i + 1].size(), "ideal did not shrink across a jump");
        for (const auto& m : slices[i + 1])
            r.expect(std::find(slices[i].begin(), slices[i].end(), m) != slices[i].end(),
                     "later ideal is not contained in the earlier one");
    }
    auto in_slice = [&](const std::vector<Monomial>& s, const Monomial& m) {
        return std::find(s.begin(), s.end(), m) != s.end();
    };
    auto j1 = multiplier_ideal_monomial(pairs3(), Rational(1), 3);
    auto j2 = multiplier_ideal_monomial(pairs3(), Rational(2), 3);
    for (const auto& g : pairs3().gens)
        for (const auto& h : j1)
            if (g.deg() + h.deg() <= 3)
                r.expect(in_slice(j2, g * h),
                         "generator times J(1) left J(2): " + monomial_str(g * h, {"x1", "x2", "x3"}));

    // the same translation property on the principal route
    auto fx2 = parse_polynomial("x^2", ring({"x"}));
    auto vt = v_filtration_table(fx2, 4, Rational(3), 1);
    r.expect(vt.entries.size() == 5, "expected jump values for 1, x, .., x^4");
    for (size_t k = 0; k + 2 < vt.entries.size(); ++k)
        r.expect(vt.entries[k].second + Rational(1) == vt.entries[k + 2].second,
                 "multiplying by x^2 did not shift the jump value by one");

    // b-functions factor completely over negative rationals, with the mandatory root
    for (const auto& [vars, src] : corpus) {
        auto b = bernstein_sato(parse_polynomial(src, ring(vars)));
        int total = 0;
        bool has_minus_one = false;
        UnivariatePoly prod = UnivariatePoly::constant(Rational(1));
        for (const auto& [root, mult] : b.roots.roots) {
            r.expect(root.sign() < 0, "root " + root.str() + " of b(" + src + ") not negative");
            has_minus_one |= root == Rational(-1);
            total += mult;
            for (int i = 0; i < mult; ++i)
                prod = prod * UnivariatePoly::linear_factor(-root);
        }
        r.expect(total == b.poly.degree() && prod == b.poly,
                 "b(" + src + ") did not factor into its listed roots");
        r.expect(has_minus_one, "b(" + src + ") is missing the root -1");
    }

    // whole reports are reproducible across runs and thread counts
    Request req;
    req.command = "vfilt";
    req.vars = {"x", "y"};
    req.poly = "x^2+y^3";
    req.alpha_max = "1";
    req.degree_bound = 2;
    req.json = true;
    auto normalized = [](const std::string& envelope) {
        auto j = nlohmann::ordered_json::parse(envelope);
        j["timing_ms"] = 0;
        return j.dump(2);
    };
    std::string first = run(req).output;
    r.expect(normalized(run(req).output) == normalized(first), "repeat run changed the report");
    Request req4 = req;
    req4.threads = 4;
    // the echo repeats the requested thread count; the computed parts must not
    auto ja = nlohmann::ordered_json::parse(first);
    auto jb = nlohmann::ordered_json::parse(run(req4).output);
    r.expect(ja["result"] == jb["result"] && ja["provenance"] == jb["provenance"],
             "thread count changed the computed result");
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"cusp b-function comes out as (s+1)(s+5/6)(s+7/6)", 30, c1_cusp_bfunction},
        {"cusp functional equation verifies; dropping a term is refuted with a witness", 2,
         c2_cusp_certificate},
        {"pairwise-products ideal: threshold 3/2, jump table, full ideal below 3/2", 2,
         c3_monomial_route},
        {"cusp multiplier ideals: full below 5/6, maximal ideal on [5/6, 1)", 120,
         c4_principal_route},
        {"cusp spectrum is 5/6 and 7/6, once each", 1, c5_cusp_spectrum},
        {"spectrum multiplicity matches the inner jump count at 5/6 and at 1/2", 120,
         c6_spectrum_vs_inner},
        {"textbook equations: x, x^2, four squares, and a two-factor certificate", 0,
         c7_textbook_equations},
        {"property sweep: annihilation, monotone tables, root layout, reproducibility", 0,
         c8_property_sweep},
    };

    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        Result res;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.body(res);
        } catch (const std::exception& e) {
            res.expect(false, std::string("threw: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0 && secs >= c.limit_s)
            res.expect(false, "exceeded the time limit");
        std::string timing = c.limit_s > 0
                                 ? " [" + std::to_string(secs).substr(0, 5) + "s, limit " +
                                       std::to_string((int)c.limit_s) + "s]"
                                 : " [" + std::to_string(secs).substr(0, 5) + "s]";
        if (res.ok) {
            std::printf("PASS  %zu/8 %s%s\n", i + 1, c.label.c_str(), timing.c_str());
        } else {
            ++failed;
            std::printf("FAIL  %zu/8 %s%s: %s\n", i + 1, c.label.c_str(), timing.c_str(),
                        res.detail.c_str());
        }
    }
    std::printf("acceptance: %zu/8 criteria passed\n", criteria.size() - failed);
    return failed;
}
