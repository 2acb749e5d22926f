#pragma once

#include <stdexcept>

namespace interstatis {

// Malformed user input: files, manifests, study shapes. CLI exit code 1.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The math cannot proceed: overflow, zero variance, zero-straddling divisor,
// eigensolver failure. CLI exit code 2. Pipeline errors carry the algorithm
// step that raised them, e.g. "step 3 (interstructure): ...".
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace interstatis
