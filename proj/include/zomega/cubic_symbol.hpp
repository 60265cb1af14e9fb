#pragma once

#include <complex>

#include "zomega/eisenstein.hpp"

namespace zomega {

/**
 * An element of {0, 1, w, w^2}: the exact value of a cubic residue symbol.
 * Non-zero values form the cyclic group of order 3.
 */
class CubicValue {
  public:
    static CubicValue zero() { return CubicValue(-1); }
    static CubicValue one() { return CubicValue(0); }
    static CubicValue omega() { return CubicValue(1); }
    static CubicValue omega_sq() { return CubicValue(2); }
    static CubicValue omega_pow(int e) { return CubicValue(((e % 3) + 3) % 3); }

    bool is_zero() const { return e_ < 0; }
    int omega_exp() const {
        if (is_zero()) throw domain_error("CubicValue::omega_exp on zero");
        return e_;
    }

    CubicValue operator*(const CubicValue& o) const {
        if (is_zero() || o.is_zero()) return zero();
        return omega_pow(e_ + o.e_);
    }
    CubicValue conj() const { return is_zero() ? zero() : omega_pow(-e_); }
    CubicValue pow(long long k) const {
        if (is_zero()) return k == 0 ? one() : zero();
        return omega_pow(int(((e_ * (k % 3)) % 3 + 3) % 3));
    }
    bool operator==(const CubicValue& o) const { return e_ == o.e_; }
    bool operator!=(const CubicValue& o) const { return e_ != o.e_; }

    std::complex<double> to_complex() const {
        if (is_zero()) return {0.0, 0.0};
        static const double s = 0.8660254037844386467637231707529362;
        if (e_ == 0) return {1.0, 0.0};
        return e_ == 1 ? std::complex<double>{-0.5, s} : std::complex<double>{-0.5, -s};
    }

    const char* str() const {
        switch (e_) {
            case 0: return "1";
            case 1: return "w";
            case 2: return "w^2";
            default: return "0";
        }
    }

  private:
    explicit CubicValue(int e) : e_(e) {}
    int e_;  // -1 for zero, else exponent of w
};

/**
 * (a/pi)_3 by the Euler criterion: the cube root of unity congruent to
 * a^{(N(pi)-1)/3} mod pi, or zero when pi | a.  pi must be a primary prime.
 */
CubicValue symbol_euler_prime(const EisensteinInt& a, const EisensteinInt& pi);

/**
 * (a/b)_3 for primary b, evaluated without factoring b: reduce a mod b, strip
 * units and lambda powers via the supplement laws read off b mod 9, swap by
 * cubic reciprocity, repeat.  Returns zero iff gcd(a, b) != 1.
 */
CubicValue cubic_symbol(const EisensteinInt& a, const EisensteinInt& b);

/**
 * The unique (alpha2, alpha3) in {-1,0,1}^2 with
 * d == 1 + alpha2*lambda^2 + alpha3*lambda^3 (mod 9); then (w/d)_3 = w^alpha2
 * and (lambda/d)_3 = w^{-alpha3}.
 */
std::pair<int, int> supplement_exponents(const EisensteinInt& d);

}  // namespace zomega
