#include "bsato/driver.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <set>
#include <sstream>

#include <json.hpp>

#include "bsato/bernstein.hpp"
#include "bsato/error.hpp"
#include "bsato/newton.hpp"
#include "bsato/parse.hpp"
#include "bsato/spectrum.hpp"

namespace bsato {

namespace {

using json = nlohmann::ordered_json;

struct Outcome {
    json echo;
    json result;
    std::string text;
    std::string route;
    std::vector<std::string> cross_checks;
};

struct Context {
    const Request& req;
    PolyRingPtr ring;
};

void validate_vars(const std::vector<std::string>& vars) {
    check_usage(!vars.empty(), "--vars is required");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        check_usage(seen.insert(v).second, "duplicate variable name \"" + v + "\"");
        bool param_like =
            v == "s" || (v.size() > 1 && v[0] == 's' &&
                         v.find_first_not_of("0123456789", 1) == std::string::npos);
        check_usage(!param_like,
                    "variable name \"" + v + "\" collides with the parameter names");
    }
    for (const auto& v : vars)
        check_usage(!seen.count("d" + v), "variable name \"d" + v +
                                              "\" collides with the derivative of \"" + v + "\"");
}

WeylRingPtr operator_ring(const std::vector<std::string>& vars, int nf) {
    std::vector<std::string> dn;
    for (const auto& v : vars) dn.push_back("d" + v);
    std::vector<std::string> params;
    if (nf == 1) {
        params = {"s"};
    } else {
        for (int j = 1; j <= nf; ++j) params.push_back("s" + std::to_string(j));
    }
    return WeylRing::make(vars, dn, params);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::vector<std::string> gen_strings(const std::vector<Monomial>& gens,
                                     const std::vector<std::string>& names) {
    std::vector<std::string> out;
    for (const auto& g : gens) out.push_back(monomial_str(g, names));
    return out;
}

std::string gens_or_none(const std::vector<std::string>& gens) {
    return gens.empty() ? "(no monomials within the bound)" : join(gens, ", ");
}

std::vector<Monomial> minimal_of(const std::vector<Monomial>& list) {
    std::vector<Monomial> out;
    for (const auto& m : list) {
        bool redundant = false;
        for (const auto& g : list)
            if (g != m && g.divides(m)) { redundant = true; break; }
        if (!redundant) out.push_back(m);
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        return a.e > b.e;
    });
    return out;
}

Polynomial required_poly(const Context& c) {
    check_usage(!c.req.poly.empty(), "this command takes a polynomial argument");
    return parse_polynomial(c.req.poly, c.ring);
}

Rational required_alpha(const Context& c) {
    check_usage(!c.req.alpha.empty(), "--alpha is required for this command");
    return Rational::parse(c.req.alpha);
}

MonomialIdeal parse_ideal(const Context& c) {
    return monomial_ideal((int)c.req.vars.size(), parse_monomial_list(c.req.monomials, c.ring));
}

json roots_json(const RootList& roots) {
    json arr = json::array();
    for (const auto& [r, m] : roots.roots) arr.push_back({{"root", r.str()}, {"mult", m}});
    return arr;
}

std::string roots_text(const RootList& roots) {
    std::vector<std::string> parts;
    for (const auto& [r, m] : roots.roots)
        parts.push_back(m > 1 ? r.str() + " (mult " + std::to_string(m) + ")" : r.str());
    return join(parts, ", ");
}

json table_json(const MultiplierTable& t, const std::vector<std::string>& names) {
    json rows = json::array();
    for (const auto& row : t.rows)
        rows.push_back({{"alpha", row.alpha.str()}, {"gens", gen_strings(row.gens, names)}});
    return rows;
}

std::string table_text(const MultiplierTable& t, const std::vector<std::string>& names) {
    std::ostringstream os;
    for (const auto& row : t.rows)
        os << "  " << row.alpha.str() << ": " << gens_or_none(gen_strings(row.gens, names))
           << "\n";
    return os.str();
}

Outcome do_bf(const Context& c) {
    Outcome o;
    Polynomial f = required_poly(c);
    o.echo["f"] = c.req.poly;
    BFunction b;
    if (!c.req.mult.empty()) {
        o.echo["mult"] = c.req.mult;
        b = bernstein_sato(f, parse_polynomial(c.req.mult, c.ring));
    } else {
        b = bernstein_sato(f);
    }
    o.route = "bfunction";
    if (verify_certificate(b.cert).valid) o.cross_checks.push_back("certificate verified");
    if (c.req.mult.empty() && bfunction_via_initial_ideal(f) == b.poly)
        o.cross_checks.push_back("initial-ideal route agrees");

    std::string display = bfunction_display(b);
    json cert;
    cert["b"] = display;
    cert["h"] = b.h.str();
    json ops = json::array();
    for (const auto& p : b.cert.ops) ops.push_back(p.str());
    cert["ops"] = ops;
    o.result["b"] = display;
    o.result["roots"] = roots_json(b.roots);
    o.result["certificate"] = cert;

    std::ostringstream os;
    os << "b(s) = " << display << "\n";
    os << "roots: " << roots_text(b.roots) << "\n";
    os << "certificate operators:\n";
    for (size_t j = 0; j < b.cert.ops.size(); ++j)
        os << "  P" << j + 1 << " = " << b.cert.ops[j].str() << "\n";
    o.text = os.str();
    return o;
}

Outcome do_verify(const Context& c) {
    Outcome o;
    check_usage(!c.req.fs.empty(), "verify needs at least one -f polynomial");
    check_usage(!c.req.bpoly.empty(), "verify needs -b");
    check_usage(c.req.ops.size() == c.req.fs.size(),
                "verify needs exactly one -P operator per -f polynomial");
    Certificate cert;
    for (const auto& fsrc : c.req.fs) cert.fs.push_back(parse_polynomial(fsrc, c.ring));
    cert.h = c.req.mult.empty() ? Polynomial(c.ring, Rational(1))
                                : parse_polynomial(c.req.mult, c.ring);
    cert.b = parse_bpoly(c.req.bpoly);
    auto wring = operator_ring(c.req.vars, (int)c.req.fs.size());
    for (const auto& osrc : c.req.ops) cert.ops.push_back(parse_weyl(osrc, wring));

    o.echo["f"] = c.req.fs;
    if (!c.req.mult.empty()) o.echo["mult"] = c.req.mult;
    o.echo["b"] = c.req.bpoly;
    o.echo["P"] = c.req.ops;

    VerifyResult vr = verify_certificate(cert);
    o.route = "bfunction";
    o.result["valid"] = vr.valid;
    o.result["witness"] = vr.witness;
    o.text = vr.valid ? "valid\n" : "invalid\nwitness: " + vr.witness + "\n";
    return o;
}

Outcome do_lct(const Context& c) {
    Outcome o;
    if (!c.req.monomials.empty()) {
        check_usage(c.req.poly.empty(), "give either a polynomial or --monomial, not both");
        o.echo["monomial"] = c.req.monomials;
        MonomialIdeal a = parse_ideal(c);
        Rational lct = lct_monomial(a);
        o.route = "newton";
        auto t = jumping_numbers_monomial(a, lct, c.req.degree_bound);
        if (!t.rows.empty() && t.rows.front().alpha == lct)
            o.cross_checks.push_back("first jumping number agrees");
        o.result["lct"] = lct.str();
        o.text = "lct = " + lct.str() + "\n";
        return o;
    }
    Polynomial f = required_poly(c);
    o.echo["f"] = c.req.poly;
    Rational lct = lct_from_bfunction(f);
    o.route = "bfunction";
    try {
        SpectrumTable sp = hodge_spectrum(f);
        if (!sp.entries.empty() && sp.entries.begin()->first == lct)
            o.cross_checks.push_back("smallest spectrum exponent agrees");
    } catch (const usage_error&) {
        // not quasi-homogeneous isolated: no second route available
    }
    o.result["lct"] = lct.str();
    o.text = "lct = " + lct.str() + "\n";
    return o;
}

Outcome do_mult_table(const Context& c) {
    Outcome o;
    Rational alpha = required_alpha(c);
    std::vector<Monomial> gens;
    if (!c.req.monomials.empty()) {
        check_usage(c.req.poly.empty(), "give either a polynomial or --monomial, not both");
        o.echo["monomial"] = c.req.monomials;
        gens = minimal_of(multiplier_ideal_monomial(parse_ideal(c), alpha, c.req.degree_bound));
        o.route = "newton";
    } else {
        Polynomial f = required_poly(c);
        o.echo["f"] = c.req.poly;
        VFiltTable vt = v_filtration_table(f, c.req.degree_bound, alpha, c.req.threads);
        std::vector<Monomial> in;
        for (const auto& [mono, a] : vt.entries)
            if (a > alpha) in.push_back(mono);
        gens = minimal_of(in);
        o.route = "bfunction";
    }
    o.echo["alpha"] = c.req.alpha;
    o.echo["degree_bound"] = c.req.degree_bound;
    auto names = gen_strings(gens, c.req.vars);
    o.result["alpha"] = alpha.str();
    o.result["degree_bound"] = c.req.degree_bound;
    o.result["gens"] = names;
    o.text = "J(" + alpha.str() + ") within degree " + std::to_string(c.req.degree_bound) +
             ": " + gens_or_none(names) + "\n";
    return o;
}

Outcome do_jumping(const Context& c) {
    Outcome o;
    check_usage(!c.req.monomials.empty(), "jumping needs --monomial (use vfilt for a polynomial)");
    check_usage(c.req.poly.empty(), "jumping needs --monomial (use vfilt for a polynomial)");
    o.echo["monomial"] = c.req.monomials;
    o.echo["alpha_max"] = c.req.alpha_max;
    o.echo["degree_bound"] = c.req.degree_bound;
    Rational amax = Rational::parse(c.req.alpha_max);
    MonomialIdeal a = parse_ideal(c);
    MultiplierTable t = jumping_numbers_monomial(a, amax, c.req.degree_bound);
    o.route = "newton";
    Rational lct = lct_monomial(a);
    if (!t.rows.empty() && t.rows.front().alpha == lct)
        o.cross_checks.push_back("log canonical threshold equals the first jump");
    o.result["alpha_max"] = amax.str();
    o.result["degree_bound"] = c.req.degree_bound;
    o.result["rows"] = table_json(t, c.req.vars);
    o.text = "jumping numbers up to " + amax.str() + " (degree bound " +
             std::to_string(c.req.degree_bound) + "):\n" + table_text(t, c.req.vars);
    return o;
}

Outcome do_vfilt(const Context& c) {
    Outcome o;
    Polynomial f = required_poly(c);
    o.echo["f"] = c.req.poly;
    o.echo["alpha_max"] = c.req.alpha_max;
    o.echo["degree_bound"] = c.req.degree_bound;
    o.echo["threads"] = c.req.threads;
    Rational amax = Rational::parse(c.req.alpha_max);
    VFiltTable vt = v_filtration_table(f, c.req.degree_bound, amax, c.req.threads);
    o.route = "bfunction";
    if (!vt.table.rows.empty() && vt.table.rows.front().alpha == lct_from_bfunction(f))
        o.cross_checks.push_back("first jump equals the log canonical threshold");

    json entries = json::array();
    for (const auto& [mono, a] : vt.entries)
        entries.push_back({{"monomial", monomial_str(mono, c.req.vars)}, {"alpha", a.str()}});
    o.result["degree_bound"] = c.req.degree_bound;
    o.result["alpha_max"] = amax.str();
    o.result["entries"] = entries;
    o.result["rows"] = table_json(vt.table, c.req.vars);
    o.result["complete"] = vt.complete;

    std::ostringstream os;
    os << "alpha(h) for monomials h up to degree " << c.req.degree_bound << ":\n";
    for (const auto& [mono, a] : vt.entries)
        os << "  " << monomial_str(mono, c.req.vars) << " -> " << a.str() << "\n";
    os << "jumps (alpha <= " << amax.str() << "):\n" << table_text(vt.table, c.req.vars);
    os << "complete: " << (vt.complete ? "yes" : "no") << "\n";
    o.text = os.str();
    return o;
}

Outcome do_inner(const Context& c) {
    Outcome o;
    Rational alpha = required_alpha(c);
    int value = 0;
    if (!c.req.monomials.empty()) {
        check_usage(c.req.poly.empty(), "give either a polynomial or --monomial, not both");
        o.echo["monomial"] = c.req.monomials;
        value = inner_jumping_multiplicity(parse_ideal(c), alpha, c.req.vars);
        o.route = "newton";
    } else {
        Polynomial f = required_poly(c);
        o.echo["f"] = c.req.poly;
        value = inner_jumping_principal(f, alpha);
        o.route = "bfunction";
    }
    o.echo["alpha"] = c.req.alpha;
    o.result["alpha"] = alpha.str();
    o.result["multiplicity"] = value;
    o.text = "inner multiplicity at alpha = " + alpha.str() + ": " + std::to_string(value) + "\n";
    return o;
}

Outcome do_spectrum(const Context& c) {
    Outcome o;
    Polynomial f = required_poly(c);
    o.echo["f"] = c.req.poly;
    SpectrumTable sp = hodge_spectrum(f);
    o.route = "spectrum";
    if (!sp.entries.empty() && sp.entries.begin()->first <= Rational(1) &&
        sp.entries.begin()->first == lct_from_bfunction(f))
        o.cross_checks.push_back("smallest exponent equals the log canonical threshold");

    WeightSystem ws = infer_weights(f);
    json weights = json::array();
    std::vector<std::string> wtext;
    for (const auto& w : ws.weights) {
        weights.push_back(w.str());
        wtext.push_back(w.str());
    }
    json entries = json::array();
    for (const auto& [a, m] : sp.entries) entries.push_back({{"alpha", a.str()}, {"mult", m}});
    o.result["weights"] = weights;
    o.result["milnor_number"] = sp.milnor_number;
    o.result["entries"] = entries;

    std::ostringstream os;
    os << "weights: " << join(wtext, ", ") << "\n";
    os << "milnor number: " << sp.milnor_number << "\n";
    os << "spectrum:\n";
    for (const auto& [a, m] : sp.entries) os << "  " << a.str() << ": " << m << "\n";
    o.text = os.str();
    return o;
}

Outcome do_check_theorem(const Context& c) {
    Outcome o;
    Polynomial f = required_poly(c);
    Rational alpha = required_alpha(c);
    o.echo["f"] = c.req.poly;
    o.echo["alpha"] = c.req.alpha;
    SpectrumCheck sc = check_spectrum_vs_inner(f, alpha);
    o.route = "spectrum";
    o.cross_checks.push_back("inner multiplicity computed on the b-function route");
    o.result["alpha"] = sc.alpha.str();
    o.result["spectrum"] = sc.spectrum_value;
    o.result["inner"] = sc.inner_value;
    o.result["equal"] = sc.equal;

    std::ostringstream os;
    os << "alpha = " << sc.alpha.str() << "\n";
    os << "spectrum multiplicity: " << sc.spectrum_value << "\n";
    os << "inner multiplicity: " << sc.inner_value << "\n";
    os << "equal: " << (sc.equal ? "yes" : "no") << "\n";
    o.text = os.str();
    return o;
}

} // namespace

Response run(const Request& req) {
    auto t0 = std::chrono::steady_clock::now();
    try {
        check_usage(req.degree_bound >= 0, "degree bound must be nonnegative");
        check_usage(req.threads >= 1, "--threads must be at least 1");
        validate_vars(req.vars);
        Context c{req, std::make_shared<PolyRing>(req.vars)};

        Outcome o;
        if (req.command == "bf") o = do_bf(c);
        else if (req.command == "verify") o = do_verify(c);
        else if (req.command == "lct") o = do_lct(c);
        else if (req.command == "mult-table") o = do_mult_table(c);
        else if (req.command == "jumping") o = do_jumping(c);
        else if (req.command == "vfilt") o = do_vfilt(c);
        else if (req.command == "inner") o = do_inner(c);
        else if (req.command == "spectrum") o = do_spectrum(c);
        else if (req.command == "check-theorem") o = do_check_theorem(c);
        else throw usage_error("unknown command \"" + req.command + "\"");

        if (!req.json) return {0, o.text};

        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        json echo;
        echo["vars"] = req.vars;
        for (auto& [k, v] : o.echo.items()) echo[k] = v;
        json prov;
        prov["route"] = o.route;
        prov["cross_checks"] = o.cross_checks;
        json out;
        out["schema"] = 1;
        out["command"] = req.command;
        out["input_echo"] = echo;
        out["result"] = o.result;
        out["provenance"] = prov;
        out["timing_ms"] = ms;
        return {0, out.dump(2) + "\n"};
    } catch (const usage_error& e) {
        return {2, std::string("error: ") + e.what() + "\n"};
    } catch (const internal_error& e) {
        return {3, std::string("internal error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return {3, std::string("internal error: ") + e.what() + "\n"};
    }
}

} // namespace bsato
