#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include "zomega/int128.hpp"

namespace zomega {

struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

/**
 * An element a + b*w of Z[w], where w = e^{2*pi*i/3} satisfies w^2 = -1 - w.
 * Coefficients are 128-bit integers with checked arithmetic: overflow throws,
 * it never wraps.
 */
struct EisensteinInt {
    int128 a{0};
    int128 b{0};

    constexpr EisensteinInt() = default;
    constexpr EisensteinInt(int128 a_, int128 b_ = 0) : a(a_), b(b_) {}

    bool operator==(const EisensteinInt& o) const { return a == o.a && b == o.b; }
    bool operator!=(const EisensteinInt& o) const { return !(*this == o); }

    bool is_zero() const { return a == 0 && b == 0; }

    // N(a + bw) = a^2 - ab + b^2 >= 0.
    int128 norm() const {
        return checked_add(checked_sub(checked_mul(a, a), checked_mul(a, b)),
                           checked_mul(b, b));
    }

    // conj(a + bw) = (a - b) - bw, since conj(w) = w^2 = -1 - w.
    EisensteinInt conj() const { return {checked_sub(a, b), -b}; }

    // Tr(a + bw) = x + conj(x) = 2a - b.
    int128 trace() const { return checked_sub(checked_mul(2, a), b); }

    EisensteinInt operator-() const { return {-a, -b}; }

    EisensteinInt operator+(const EisensteinInt& o) const {
        return {checked_add(a, o.a), checked_add(b, o.b)};
    }
    EisensteinInt operator-(const EisensteinInt& o) const {
        return {checked_sub(a, o.a), checked_sub(b, o.b)};
    }
    // (a1 + b1w)(a2 + b2w) = (a1a2 - b1b2) + (a1b2 + a2b1 - b1b2)w.
    EisensteinInt operator*(const EisensteinInt& o) const {
        int128 bb = checked_mul(b, o.b);
        return {checked_sub(checked_mul(a, o.a), bb),
                checked_sub(checked_add(checked_mul(a, o.b), checked_mul(b, o.a)), bb)};
    }
    EisensteinInt& operator+=(const EisensteinInt& o) { return *this = *this + o; }
    EisensteinInt& operator-=(const EisensteinInt& o) { return *this = *this - o; }
    EisensteinInt& operator*=(const EisensteinInt& o) { return *this = *this * o; }

    bool is_unit() const { return norm() == 1; }

    // c == 1 (mod 3), i.e. a == 1 (mod 3) and b == 0 (mod 3).
    bool is_primary() const { return mod_floor(a, 3) == 1 && mod_floor(b, 3) == 0; }

    // Embedding w -> e^{2*pi*i/3}.
    std::complex<double> to_complex() const {
        return {double(a) - 0.5 * double(b), 0.8660254037844386467637231707529362 * double(b)};
    }

    std::string str() const;
};

inline const EisensteinInt kOmega{0, 1};
inline const EisensteinInt kOmegaSqElem{-1, -1};
inline const EisensteinInt kLambda{1, 2};  // lambda = 1 + 2w = sqrt(-3)

/** One of the six units {+1, -1, +w, -w, +w^2, -w^2}, stored as (-1)^s * w^e. */
class Unit {
  public:
    constexpr Unit() = default;
    constexpr Unit(int sign, int omega_exp) : s_(sign < 0 ? 1 : 0), e_(((omega_exp % 3) + 3) % 3) {}

    int sign() const { return s_ ? -1 : 1; }
    int omega_exp() const { return e_; }

    Unit operator*(const Unit& o) const { return Unit(sign() * o.sign(), e_ + o.e_); }
    Unit inverse() const { return Unit(sign(), (3 - e_) % 3); }
    bool operator==(const Unit& o) const { return s_ == o.s_ && e_ == o.e_; }

    EisensteinInt to_eisenstein() const {
        EisensteinInt u = e_ == 0 ? EisensteinInt{1, 0} : (e_ == 1 ? kOmega : kOmegaSqElem);
        return s_ ? -u : u;
    }

    static Unit from_eisenstein(const EisensteinInt& x);
    static const Unit& all(int i);  // i in [0, 6)

  private:
    int s_{0};
    int e_{0};
};

/**
 * Euclidean division: x = q*m + r with N(r) < N(m).  q is obtained by rounding
 * both rational coordinates of x/m to the nearest integer, ties toward -inf.
 */
std::pair<EisensteinInt, EisensteinInt> divrem(const EisensteinInt& x, const EisensteinInt& m);

/** Exact division; throws if m does not divide x. */
EisensteinInt div_exact(const EisensteinInt& x, const EisensteinInt& m);

bool divides(const EisensteinInt& m, const EisensteinInt& x);

/**
 * Greatest common divisor, normalized to lambda^j * (primary element).
 * gcd(x, 0) is the normalization of x; gcd(0, 0) throws.
 */
EisensteinInt gcd(EisensteinInt x, EisensteinInt y);

/**
 * Writes c = u * c' with c' == 1 (mod 3) the unique primary associate.
 * Requires (c, 3) = 1, i.e. 3 does not divide N(c).
 */
std::pair<Unit, EisensteinInt> primary_normalize(const EisensteinInt& c);

/** Parses strings like "1+3w", "-2-3w", "7", "w", "-w". */
EisensteinInt parse_eisenstein(const std::string& s);

}  // namespace zomega
