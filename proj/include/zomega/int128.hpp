#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zomega {

using int128 = __int128;
using uint128 = unsigned __int128;

struct overflow_error : std::overflow_error {
    overflow_error() : std::overflow_error("zomega: 128-bit coefficient overflow") {}
};

inline int128 checked_add(int128 x, int128 y) {
    int128 r;
    if (__builtin_add_overflow(x, y, &r)) throw overflow_error{};
    return r;
}

inline int128 checked_sub(int128 x, int128 y) {
    int128 r;
    if (__builtin_sub_overflow(x, y, &r)) throw overflow_error{};
    return r;
}

inline int128 checked_mul(int128 x, int128 y) {
    int128 r;
    if (__builtin_mul_overflow(x, y, &r)) throw overflow_error{};
    return r;
}

// Floor division (rounds toward -inf), matching the divrem tie convention.
inline int128 floor_div(int128 a, int128 b) {
    int128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline int128 mod_floor(int128 a, int128 b) { return a - floor_div(a, b) * b; }

std::string to_string(int128 v);
int128 parse_int128(const std::string& s);

}  // namespace zomega
