#include "zomega/eisenstein.hpp"

#include <array>
#include <cctype>

namespace zomega {

std::string EisensteinInt::str() const {
    if (b == 0) return to_string(a);
    std::string bs;
    if (b == 1)
        bs = "w";
    else if (b == -1)
        bs = "-w";
    else
        bs = to_string(b) + "w";
    if (a == 0) return bs;
    return to_string(a) + (b > 0 ? "+" : "") + bs;
}

Unit Unit::from_eisenstein(const EisensteinInt& x) {
    for (int i = 0; i < 6; ++i)
        if (all(i).to_eisenstein() == x) return all(i);
    throw domain_error("not a unit: " + x.str());
}

const Unit& Unit::all(int i) {
    static const std::array<Unit, 6> units = {Unit(1, 0), Unit(1, 1), Unit(1, 2),
                                              Unit(-1, 0), Unit(-1, 1), Unit(-1, 2)};
    return units.at(size_t(i));
}

namespace {

// Round n/d (d > 0) to the nearest integer, ties toward -inf.
int128 round_nearest_ties_down(int128 n, int128 d) {
    return floor_div(checked_add(checked_mul(2, n), d - 1), checked_mul(2, d));
}

}  // namespace

std::pair<EisensteinInt, EisensteinInt> divrem(const EisensteinInt& x, const EisensteinInt& m) {
    if (m.is_zero()) throw domain_error("divrem: zero modulus");
    EisensteinInt num = x * m.conj();
    int128 n = m.norm();
    EisensteinInt q{round_nearest_ties_down(num.a, n), round_nearest_ties_down(num.b, n)};
    EisensteinInt r = x - q * m;
    return {q, r};
}

bool divides(const EisensteinInt& m, const EisensteinInt& x) {
    if (m.is_zero()) return x.is_zero();
    return divrem(x, m).second.is_zero();
}

EisensteinInt div_exact(const EisensteinInt& x, const EisensteinInt& m) {
    auto [q, r] = divrem(x, m);
    if (!r.is_zero()) throw domain_error("div_exact: " + m.str() + " does not divide " + x.str());
    return q;
}

EisensteinInt gcd(EisensteinInt x, EisensteinInt y) {
    if (x.is_zero() && y.is_zero()) throw domain_error("gcd(0, 0) is undefined");
    while (!y.is_zero()) {
        auto [q, r] = divrem(x, y);
        x = y;
        y = r;
    }
    // Normalize to lambda^j * primary.
    EisensteinInt lam_pow{1, 0};
    while (mod_floor(x.norm(), 3) == 0) {
        x = div_exact(x, kLambda);
        lam_pow = lam_pow * kLambda;
    }
    return lam_pow * primary_normalize(x).second;
}

std::pair<Unit, EisensteinInt> primary_normalize(const EisensteinInt& c) {
    if (c.is_zero()) throw domain_error("primary_normalize: zero input");
    if (mod_floor(c.norm(), 3) == 0)
        throw domain_error("primary_normalize: lambda divides " + c.str());
    for (int i = 0; i < 6; ++i) {
        const Unit& v = Unit::all(i);
        EisensteinInt cand = v.to_eisenstein() * c;
        if (cand.is_primary()) return {v.inverse(), cand};
    }
    throw std::logic_error("primary_normalize: no primary associate found");
}

EisensteinInt parse_eisenstein(const std::string& s) {
    // Grammar: [int][(+|-)[int]w] with optional whitespace; "w" alone means omega.
    std::string t;
    for (char ch : s)
        if (!std::isspace((unsigned char)ch)) t += ch;
    if (t.empty()) throw std::invalid_argument("parse_eisenstein: empty string");
    size_t wpos = t.find_first_of("wW");
    if (wpos == std::string::npos) return {parse_int128(t), 0};
    if (wpos + 1 != t.size())
        throw std::invalid_argument("parse_eisenstein: trailing characters in \"" + s + "\"");
    std::string head = t.substr(0, wpos);
    // Split head into the rational part and the omega coefficient.
    size_t split = std::string::npos;
    for (size_t i = head.size(); i-- > 1;) {
        if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '+' && head[i - 1] != '-') {
            split = i;
            break;
        }
    }
    std::string apart, bpart;
    if (split == std::string::npos) {
        apart = "0";
        bpart = head;
    } else {
        apart = head.substr(0, split);
        bpart = head.substr(split);
    }
    if (bpart.empty() || bpart == "+") bpart = "1";
    if (bpart == "-") bpart = "-1";
    return {parse_int128(apart), parse_int128(bpart)};
}

}  // namespace zomega
