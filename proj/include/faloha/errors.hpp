#pragma once

#include <stdexcept>
#include <string>

namespace faloha {

// Invalid user-supplied configuration (bad ranges, malformed files).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller broke an API precondition or an internal invariant failed.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace faloha
