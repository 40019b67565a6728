#pragma once

// Exact integer arithmetic support: overflow-checked 64-bit operations,
// sign-correct floor/ceil division, an exact integer square root, and the
// runtime input guard that keeps every intermediate representable.

#include <atomic>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace bnloci {

using Int = std::int64_t;
using Int128 = __int128;

namespace detail {
// Accepted input magnitude. The default keeps all closed-form expressions in
// this library (including the caz-type products, evaluated in 128-bit lanes
// and narrowed back) inside the int64 range.
inline std::atomic<Int> input_guard_value{1'000'000};
}  // namespace detail

inline Int input_guard() noexcept {
    return detail::input_guard_value.load(std::memory_order_relaxed);
}

inline void set_input_guard(Int bound) {
    if (bound < 2) throw std::invalid_argument("input guard must be >= 2");
    detail::input_guard_value.store(bound, std::memory_order_relaxed);
}

// Overflow in any of these signals input out of the documented range.
inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow: input out of range");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow: input out of range");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow: input out of range");
    return r;
}

inline Int narrow_128(Int128 v) {
    if (v > Int128(INT64_MAX) || v < Int128(INT64_MIN))
        throw std::overflow_error("integer overflow: input out of range");
    return static_cast<Int>(v);
}

// Division helpers require b > 0; a may have either sign.
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

inline Int ceil_div(Int a, Int b) {
    Int q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

// floor(sqrt(n)) by Newton iteration on integers. An off-by-one here would
// change rank bounds, so no floating point is involved.
inline Int isqrt(Int n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    if (n < 2) return n;
    Int x = n;
    Int y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

inline void require_guarded(std::initializer_list<Int> values, const char* what) {
    const Int bound = 2 * input_guard();
    for (Int v : values) {
        if (v > bound || v < -bound)
            throw std::out_of_range(std::string(what) +
                                    ": magnitude exceeds the configured input bound");
    }
}

}  // namespace bnloci
