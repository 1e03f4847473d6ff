#pragma once

#include <stdexcept>
#include <string>

namespace maxlin {

// A documented precondition of an operation does not hold for the given
// input (wrong parameter range, non-spanning family, non-integral weights,
// and so on). Distinct from std::invalid_argument, which we reserve for
// plain API misuse such as dimension mismatches.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Internal invariant check that stays active in release builds.
#define MAXLIN_CHECK(cond, msg)                                              \
    do {                                                                     \
        if (!(cond)) throw std::logic_error(std::string("internal invariant violated: ") + (msg)); \
    } while (false)

} // namespace maxlin
