#pragma once

#include <stdexcept>
#include <string>

namespace bsato {

// Caller-side misuse: bad input, unsupported shape, violated precondition.
// The CLI maps this to exit code 2.
struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Broken internal invariant (a bug, or exceeded hard engine limits).
// The CLI maps this to exit code 3.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void check_usage(bool ok, const std::string& msg) {
    if (!ok) throw usage_error(msg);
}

inline void check_internal(bool ok, const std::string& msg) {
    if (!ok) throw internal_error(msg);
}

} // namespace bsato
