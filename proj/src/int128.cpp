#include "zomega/int128.hpp"

namespace zomega {

std::string to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    uint128 u = neg ? uint128(0) - uint128(v) : uint128(v);
    char buf[48];
    int i = 48;
    while (u > 0) {
        buf[--i] = char('0' + int(u % 10));
        u /= 10;
    }
    std::string s(buf + i, buf + 48);
    return neg ? "-" + s : s;
}

int128 parse_int128(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_int128: empty string");
    size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("parse_int128: no digits");
    int128 v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("parse_int128: bad digit in \"" + s + "\"");
        v = checked_add(checked_mul(v, 10), s[i] - '0');
    }
    return neg ? -v : v;
}

}  // namespace zomega
