#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zomega/cubic_symbol.hpp"
#include "zomega/eisenstein.hpp"
#include "zomega/factor.hpp"

using namespace zomega;

namespace {

std::mt19937_64 rng(777);

EisensteinInt random_elem(long long lo, long long hi) {
    std::uniform_int_distribution<long long> d(lo, hi);
    return {d(rng), d(rng)};
}

// (a/b)_3 for primary b by factoring b and multiplying Euler-criterion values
// at each prime: an independent slow oracle for the fast symbol.
CubicValue symbol_factored_oracle(const EisensteinInt& a, const EisensteinInt& b) {
    CubicValue v = CubicValue::one();
    for (const PrimePower& pp : factor(b).factors)
        for (int e = 0; e < pp.exp; ++e) v = v * symbol_euler_prime(a, pp.prime);
    return v;
}

std::vector<EisensteinInt> primary_sample(int count, long long hi) {
    std::vector<EisensteinInt> out;
    while ((int)out.size() < count) {
        EisensteinInt c = random_elem(-hi, hi);
        if (c.is_zero() || mod_floor(c.norm(), 3) == 0) continue;
        out.push_back(primary_normalize(c).second);
    }
    return out;
}

}  // namespace

TEST_CASE("fast symbol equals the factored Euler oracle on 10^4 random pairs") {
    int checked = 0;
    while (checked < 10000) {
        EisensteinInt b = random_elem(-1000, 1000);
        if (b.is_zero() || mod_floor(b.norm(), 3) == 0 || b.norm() > 1000000) continue;
        b = primary_normalize(b).second;
        EisensteinInt a = random_elem(-100000, 100000);
        CHECK(cubic_symbol(a, b) == symbol_factored_oracle(a, b));
        ++checked;
    }
}

TEST_CASE("Euler criterion at a prime: exact small cases") {
    EisensteinInt pi7 = split_rational_prime(7).first;
    // the symbol is 1 exactly on the nonzero cubes mod pi7
    int ones = 0, total = 0;
    for (long long x = 1; x < 7; ++x) {
        CubicValue v = symbol_euler_prime(EisensteinInt{x, 0}, pi7);
        CHECK_FALSE(v.is_zero());
        if (v == CubicValue::one()) ++ones;
        ++total;
    }
    CHECK(total == 6);
    CHECK(ones == 2);  // the cubes among 1..6 mod 7 are {1, 6}
    CHECK(symbol_euler_prime(EisensteinInt{7, 0}, pi7).is_zero());
}

TEST_CASE("symbol is zero exactly when gcd(a, b) != 1") {
    for (const EisensteinInt& b : primary_sample(300, 200)) {
        for (int i = 0; i < 5; ++i) {
            EisensteinInt a = random_elem(-500, 500);
            bool coprime = a.is_zero() ? b.is_unit() : gcd(a, b).norm() == 1;
            CHECK(cubic_symbol(a, b).is_zero() == !coprime);
        }
    }
}

TEST_CASE("complete multiplicativity in the numerator") {
    for (int i = 0; i < 500; ++i) {
        EisensteinInt b = primary_sample(1, 300)[0];
        EisensteinInt a1 = random_elem(-300, 300), a2 = random_elem(-300, 300);
        CHECK(cubic_symbol(a1 * a2, b) == cubic_symbol(a1, b) * cubic_symbol(a2, b));
    }
}

TEST_CASE("multiplicativity in the denominator") {
    for (int i = 0; i < 500; ++i) {
        auto bs = primary_sample(2, 100);
        EisensteinInt a = random_elem(-300, 300);
        CHECK(cubic_symbol(a, bs[0] * bs[1]) == cubic_symbol(a, bs[0]) * cubic_symbol(a, bs[1]));
    }
}

TEST_CASE("periodicity: (a/b) depends only on a mod b") {
    for (int i = 0; i < 500; ++i) {
        EisensteinInt b = primary_sample(1, 300)[0];
        EisensteinInt a = random_elem(-300, 300);
        EisensteinInt t = random_elem(-50, 50);
        CHECK(cubic_symbol(a, b) == cubic_symbol(a + t * b, b));
    }
}

TEST_CASE("cubic reciprocity (a/b) = (b/a) on 10^3 primary pairs") {
    auto as = primary_sample(1000, 400);
    auto bs = primary_sample(1000, 400);
    for (int i = 0; i < 1000; ++i) {
        if (gcd(as[i], bs[i]).norm() != 1) continue;
        CHECK(cubic_symbol(as[i], bs[i]) == cubic_symbol(bs[i], as[i]));
    }
}

TEST_CASE("supplement laws via d mod 9 on 10^3 primary elements") {
    for (const EisensteinInt& d : primary_sample(1000, 500)) {
        auto [a2, a3] = supplement_exponents(d);
        // defining congruence d == 1 + a2 lambda^2 + a3 lambda^3 (mod 9)
        EisensteinInt l2 = kLambda * kLambda, l3 = l2 * kLambda;
        EisensteinInt rem = d - (EisensteinInt{1, 0} + EisensteinInt{a2, 0} * l2 +
                                 EisensteinInt{a3, 0} * l3);
        CHECK(divides(EisensteinInt{9, 0}, rem));
        // the laws themselves, against the factored oracle
        CHECK(symbol_factored_oracle(kOmega, d) == CubicValue::omega_pow(a2));
        CHECK(symbol_factored_oracle(kLambda, d) == CubicValue::omega_pow(-a3));
        // and against the fast path
        CHECK(cubic_symbol(kOmega, d) == CubicValue::omega_pow(a2));
        CHECK(cubic_symbol(kLambda, d) == CubicValue::omega_pow(-a3));
    }
}

TEST_CASE("conjugation symmetry: conj of symbol = symbol of conjugates") {
    for (int i = 0; i < 500; ++i) {
        EisensteinInt b = primary_sample(1, 300)[0];
        EisensteinInt a = random_elem(-300, 300);
        EisensteinInt bc = b.conj();
        if (!bc.is_primary()) continue;  // conj of primary is primary
        CHECK(cubic_symbol(a, b).conj() == cubic_symbol(a.conj(), bc));
    }
}

TEST_CASE("cubes are cubic residues") {
    for (int i = 0; i < 300; ++i) {
        EisensteinInt b = primary_sample(1, 200)[0];
        EisensteinInt a = random_elem(-60, 60);
        EisensteinInt a3 = a * a * a;
        CubicValue v = cubic_symbol(a3, b);
        if (!v.is_zero()) CHECK(v == CubicValue::one());
    }
}

TEST_CASE("CubicValue group arithmetic") {
    CubicValue w = CubicValue::omega();
    CHECK(w * w == CubicValue::omega_sq());
    CHECK(w * w * w == CubicValue::one());
    CHECK(w.conj() == CubicValue::omega_sq());
    CHECK(w.pow(3) == CubicValue::one());
    CHECK(w.pow(-1) == CubicValue::omega_sq());
    CHECK(CubicValue::zero() * w == CubicValue::zero());
    CHECK(CubicValue::zero().pow(0) == CubicValue::one());
    CHECK(std::abs(w.to_complex() - std::complex<double>(-0.5, 0.8660254037844386)) < 1e-15);
}
