#pragma once

#include <stdexcept>
#include <string>

namespace gkm {

// Malformed input data or a violated call precondition.  The CLI maps this
// (together with usage problems) to exit code 1.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal invariant failed; always a bug, never a data problem.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace gkm
