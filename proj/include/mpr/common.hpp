#ifndef MPR_COMMON_HPP
#define MPR_COMMON_HPP

#include <stdexcept>
#include <string>

namespace mpr {

// Malformed input: bad sizes, slot mismatches, violated preconditions.
// The CLI maps this to exit code 2.
struct input_error : std::invalid_argument {
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// A search or enumeration was asked to go beyond its configured bound.
// Distinct from a negative verdict; the CLI maps this to exit code 3.
struct bound_error : std::runtime_error {
    explicit bound_error(const std::string& what) : std::runtime_error(what) {}
};

// Violation of an invariant that valid inputs cannot trigger.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Ground sets are packed into single 64-bit row words.
inline constexpr int kMaxElements = 64;

} // namespace mpr

#endif
