#include <cstdlib>
#include <cstring>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bsato/driver.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

int env_degree_bound() {
    const char* env = std::getenv("BSATO_DEGREE_BOUND");
    if (!env) return 6;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0 || v > 1000) {
        std::cerr << "error: BSATO_DEGREE_BOUND must be a small nonnegative integer\n";
        std::exit(2);
    }
    return (int)v;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Bernstein-Sato polynomials, multiplier ideals and Hodge spectra"};
    app.require_subcommand(1);

    bsato::Request req;
    req.degree_bound = env_degree_bound();
    std::string vars_csv;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--vars", vars_csv, "comma-separated variable names")->required();
        sub->add_flag("--json", req.json, "emit the machine-readable report");
    };
    auto bound_opt = [&](CLI::App* sub) {
        sub->add_option("--degree-bound", req.degree_bound,
                        "monomial truncation degree (BSATO_DEGREE_BOUND overrides the default)");
    };

    auto* bf = app.add_subcommand("bf", "Bernstein-Sato polynomial with certificate");
    common(bf);
    bf->add_option("f", req.poly, "the polynomial")->required();
    bf->add_option("--mult", req.mult, "relative factor h for b_{f,h}");

    auto* verify = app.add_subcommand("verify", "check a functional-equation certificate");
    common(verify);
    verify->add_option("-f", req.fs, "factor polynomial (repeatable)")
        ->required()
        ->allow_extra_args(false);
    verify->add_option("-b", req.bpoly, "candidate b polynomial in s")->required();
    verify->add_option("-P", req.ops, "operator for one factor (repeatable)")
        ->required()
        ->allow_extra_args(false);
    verify->add_option("--mult", req.mult, "relative factor h");

    auto* lct = app.add_subcommand("lct", "log canonical threshold");
    common(lct);
    lct->add_option("f", req.poly, "the polynomial");
    lct->add_option("--monomial", req.monomials, "monomial ideal generators");
    bound_opt(lct);

    auto* mult = app.add_subcommand("mult-table", "multiplier ideal at a coefficient");
    common(mult);
    mult->add_option("f", req.poly, "the polynomial");
    mult->add_option("--monomial", req.monomials, "monomial ideal generators");
    mult->add_option("--alpha", req.alpha, "coefficient")->required();
    bound_opt(mult);
    mult->add_option("--threads", req.threads, "worker threads for the polynomial route");

    auto* jumping = app.add_subcommand("jumping", "jumping numbers of a monomial ideal");
    common(jumping);
    jumping->add_option("--monomial", req.monomials, "monomial ideal generators")->required();
    jumping->add_option("--alpha-max", req.alpha_max, "largest coefficient listed");
    bound_opt(jumping);

    auto* vfilt = app.add_subcommand("vfilt", "monomial jump table along a polynomial");
    common(vfilt);
    vfilt->add_option("f", req.poly, "the polynomial")->required();
    vfilt->add_option("--alpha-max", req.alpha_max, "largest jump listed");
    bound_opt(vfilt);
    vfilt->add_option("--threads", req.threads, "worker threads");

    auto* inner = app.add_subcommand("inner", "inner jumping multiplicity at the origin");
    common(inner);
    inner->add_option("f", req.poly, "the polynomial");
    inner->add_option("--monomial", req.monomials, "monomial ideal generators");
    inner->add_option("--alpha", req.alpha, "the jump to measure")->required();

    auto* spectrum = app.add_subcommand("spectrum", "Hodge spectrum (quasi-homogeneous isolated)");
    common(spectrum);
    spectrum->add_option("f", req.poly, "the polynomial")->required();

    auto* check = app.add_subcommand("check-theorem", "spectrum vs inner multiplicity at alpha");
    common(check);
    check->add_option("f", req.poly, "the polynomial")->required();
    check->add_option("--alpha", req.alpha, "comparison point in (0, 1]")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    req.command = app.get_subcommands().front()->get_name();
    req.vars = split_csv(vars_csv);

    bsato::Response res = bsato::run(req);
    (res.exit_code == 0 ? std::cout : std::cerr) << res.output;
    return res.exit_code;
}
