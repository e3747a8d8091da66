#pragma once

#include <stdexcept>

namespace ukc {

// Bad caller input: malformed instances, invalid sizes, out-of-range indices.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A strategy/space combination the algorithms are not defined for.
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration would exceed its configured cap or budget.
struct SizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ukc
