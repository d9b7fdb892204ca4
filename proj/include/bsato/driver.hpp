#pragma once

#include <string>
#include <vector>

namespace bsato {

// One command invocation, flag-parsed but not yet interpreted. String fields
// are raw user input; empty means "not given". Defaults follow the CLI:
// degree bound 6 (BSATO_DEGREE_BOUND overrides, the flag wins), alpha_max 2.
struct Request {
    std::string command; // bf verify lct mult-table jumping vfilt inner spectrum check-theorem
    std::vector<std::string> vars;
    std::string poly;                // positional polynomial
    std::vector<std::string> fs;     // -f occurrences (verify)
    std::string monomials;           // --monomial generator list
    std::string mult;                // --mult: the relative factor h
    std::string bpoly;               // -b
    std::vector<std::string> ops;    // -P occurrences
    std::string alpha;               // --alpha
    std::string alpha_max = "2";     // --alpha-max
    int degree_bound = 6;
    int threads = 1;
    bool json = false;
};

// output is the complete report (text or json) on success, or the single
// error line on failure; nothing is emitted before the computation finishes.
struct Response {
    int exit_code = 0; // 0 success, 2 usage error, 3 internal invariant failure
    std::string output;
};

Response run(const Request& req);

} // namespace bsato
