#include "zomega/cubic_symbol.hpp"

#include "zomega/factor.hpp"

namespace zomega {

namespace {

EisensteinInt mod9(const EisensteinInt& x) {
    return {mod_floor(x.a, 9), mod_floor(x.b, 9)};
}

EisensteinInt powmod(EisensteinInt base, int128 e, const EisensteinInt& m) {
    EisensteinInt r{1, 0};
    base = divrem(base, m).second;
    while (e > 0) {
        if (e & 1) r = divrem(r * base, m).second;
        base = divrem(base * base, m).second;
        e >>= 1;
    }
    return r;
}

}  // namespace

std::pair<int, int> supplement_exponents(const EisensteinInt& d) {
    if (!d.is_primary()) throw domain_error("supplement_exponents: input must be primary");
    const EisensteinInt lam2{-3, 0};   // lambda^2 = -3
    const EisensteinInt lam3{-3, -6};  // lambda^3 = -3*lambda
    EisensteinInt target = mod9(d);
    for (int a2 = -1; a2 <= 1; ++a2)
        for (int a3 = -1; a3 <= 1; ++a3) {
            EisensteinInt cand{1, 0};
            cand += EisensteinInt(a2, 0) * lam2;
            cand += EisensteinInt(a3, 0) * lam3;
            if (mod9(cand) == target) return {a2, a3};
        }
    throw std::logic_error("supplement_exponents: no representation (impossible)");
}

CubicValue symbol_euler_prime(const EisensteinInt& a, const EisensteinInt& pi) {
    if (!pi.is_primary() || !is_eisenstein_prime(pi))
        throw domain_error("symbol_euler_prime: modulus must be a primary prime");
    int128 n = pi.norm();
    EisensteinInt r = powmod(a, (n - 1) / 3, pi);
    if (r.is_zero()) return CubicValue::zero();
    for (int j = 0; j < 3; ++j) {
        EisensteinInt wj = j == 0 ? EisensteinInt{1, 0} : (j == 1 ? kOmega : kOmegaSqElem);
        if (divrem(r - wj, pi).second.is_zero()) return CubicValue::omega_pow(j);
    }
    throw std::logic_error("symbol_euler_prime: residue is not a cube root of unity");
}

CubicValue cubic_symbol(const EisensteinInt& a, const EisensteinInt& b) {
    if (!b.is_primary()) throw domain_error("cubic_symbol: modulus must be primary");
    EisensteinInt A = a, B = b;
    int acc = 0;
    const EisensteinInt one{1, 0};
    for (;;) {
        if (B == one) return CubicValue::omega_pow(acc);
        A = divrem(A, B).second;
        if (A.is_zero()) return CubicValue::zero();
        // A = (+/-1) * w^e * lambda^j * A1 with A1 primary; (-1/B)_3 = 1 always.
        int j = 0;
        while (mod_floor(A.norm(), 3) == 0) {
            A = div_exact(A, kLambda);
            ++j;
        }
        auto [u, A1] = primary_normalize(A);
        auto [a2, a3] = supplement_exponents(B);
        acc += a2 * u.omega_exp() - a3 * j;
        if (A1 == one) return CubicValue::omega_pow(acc);
        // Cubic reciprocity: (A1/B)_3 = (B/A1)_3 for primary A1, B.
        A = B;
        B = A1;
    }
}

}  // namespace zomega
