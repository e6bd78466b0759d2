#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgpkit {

using Int = std::int64_t;

/// Thrown when a computation would exceed the 64-bit integer range.
struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int checked_add(Int a, Int b) {
    Int r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in addition: " + std::to_string(a) + " + " +
                            std::to_string(b));
    }
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r = 0;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in subtraction: " + std::to_string(a) + " - " +
                            std::to_string(b));
    }
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in multiplication: " + std::to_string(a) + " * " +
                            std::to_string(b));
    }
    return r;
}

}  // namespace sgpkit
