#pragma once

#include <stdexcept>
#include <string>

namespace routelab {

// Rejected user input (bad flag values, malformed files, violated
// preconditions). The CLI maps this to exit code 2; everything else
// that escapes is exit code 1.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class ExecMode { Serial, OpenMP };

}  // namespace routelab
