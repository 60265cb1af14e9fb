#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "zomega/eisenstein.hpp"

namespace zomega {

struct PrimePower {
    EisensteinInt prime;  // primary prime (split, or the primary associate -q of an inert q)
    int exp{0};
};

/**
 * c = unit * lambda^lambda_exp * prod prime^exp, with every listed prime
 * primary and the list sorted by (norm, a, b).
 */
struct PrimaryFactorization {
    Unit unit;
    int lambda_exp{0};
    std::vector<PrimePower> factors;

    EisensteinInt reassemble() const;
    bool is_squarefree() const;
    int mobius() const;       // 0 unless squarefree (lambda counts as a prime)
    int128 euler_phi() const; // phi of the lambda-free primary part
    int omega() const;        // number of distinct primes, lambda included
};

// ---- rational integer helpers ----------------------------------------------

bool is_rational_prime(uint64_t n);
std::vector<std::pair<uint64_t, int>> factor_u64(uint64_t n);
const std::vector<uint32_t>& small_primes();                 // primes below 10^6
std::vector<uint32_t> primes_up_to(uint32_t limit);          // simple sieve
uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m);
uint64_t sqrt_mod(uint64_t a, uint64_t p);                   // Tonelli-Shanks

// ---- Z[w] primes ------------------------------------------------------------

/**
 * For p == 1 (mod 3) returns (pi, conj(pi)) with N(pi) = p, both primary, and
 * pi the factor with positive imaginary part under w -> e^{2*pi*i/3} (b > 0).
 */
std::pair<EisensteinInt, EisensteinInt> split_rational_prime(uint64_t p);

/** Brute-force oracle for split_rational_prime; p < 10^4. */
std::pair<EisensteinInt, EisensteinInt> split_prime_direct(uint64_t p);

/** The primary associate of an inert rational prime q == 2 (mod 3), i.e. -q. */
EisensteinInt inert_primary(uint64_t q);

bool is_eisenstein_prime(const EisensteinInt& c);

PrimaryFactorization factor(const EisensteinInt& c);

struct MultiplicativeInfo {
    int mobius;
    int128 euler_phi;
    int omega;
    bool is_squarefree;
};
MultiplicativeInfo multiplicative_functions(const EisensteinInt& c);  // c primary

// ---- enumeration ------------------------------------------------------------

enum class PrimaryPredicate { All, Prime, Squarefree };

/**
 * All primary c with lo < N(c) <= hi satisfying the predicate, in canonical
 * (norm, a, b) order.  WRough selects elements all of whose prime factors
 * have norm > w.
 */
std::vector<EisensteinInt> enumerate_primary(int128 lo, int128 hi, PrimaryPredicate pred);
std::vector<EisensteinInt> enumerate_primary_wrough(int128 lo, int128 hi, int128 w);

/** All k in Z[w] (not just primary) with N(k) <= hi, including 0. */
std::vector<EisensteinInt> enumerate_all(int128 hi);

}  // namespace zomega
