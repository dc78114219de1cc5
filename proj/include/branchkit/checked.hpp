#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include "branchkit/errors.hpp"

namespace branchkit {

/// Multiplicities and partition counts. Signed so that the recursion's
/// subtraction step can detect underflow instead of wrapping.
using Count = std::int64_t;

template <std::integral T>
T checked_add(T a, T b) {
    T r;
    if (__builtin_add_overflow(a, b, &r))
        throw ArithmeticOverflow("integer overflow in addition: " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

template <std::integral T>
T checked_sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r))
        throw ArithmeticOverflow("integer overflow in subtraction: " + std::to_string(a) + " - " + std::to_string(b));
    return r;
}

template <std::integral T>
T checked_mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArithmeticOverflow("integer overflow in multiplication: " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

} // namespace branchkit
