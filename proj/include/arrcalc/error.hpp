#pragma once

#include <stdexcept>
#include <string>

namespace arrcalc {

enum class errc {
    invalid_argument = 1,  // bad parameters or malformed input
    unsupported = 2,       // request outside the formula catalog
    guard_refused = 3,     // instance exceeds a size guard
    assertion_failed = 4,  // internal exactness check tripped
    no_convergence = 5,    // iterative root refinement gave up
    parse_error = 6,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

inline void require(bool cond, errc code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

}  // namespace arrcalc
