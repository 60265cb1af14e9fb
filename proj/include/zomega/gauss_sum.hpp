#pragma once

#include <complex>
#include <cstdint>

#include "zomega/cubic_symbol.hpp"
#include "zomega/eisenstein.hpp"

namespace zomega {

enum class Provenance { direct, fast_prime, composite_twisted };

/** A computed value of gtilde(c) (unit modulus on squarefree c) with an error bound. */
struct GaussSumValue {
    std::complex<double> value;
    int128 modulus_norm{1};
    Provenance provenance{Provenance::direct};
    double err_bound{0.0};
};

/**
 * The additive character e_check(x/c) = e(Tr(x * conj(c)) / N(c)): an exact
 * rational phase T/N with T, N integers.
 */
std::complex<double> additive_character(const EisensteinInt& x, const EisensteinInt& c);

/**
 * gtilde(pi) for a primary prime pi of split rational norm p == 1 (mod 3),
 * computed in O(p) as (1/sqrt(p)) * sum_x chi(x) e(x*t/p) with t = Tr(pi) and
 * chi built from a primitive-root walk calibrated by w == -a/b (mod p).
 */
GaussSumValue gauss_sum_prime(const EisensteinInt& pi);

/**
 * S_p = sum_{n mod p} e(n^3/p) for p == 1 (mod 3), by exact-phase summation
 * over the cubic residues (incremental cubes; renormalized rotation phases).
 */
double kummer_Sp(uint64_t p);

/**
 * Fast gtilde at a split prime: computes S_p and selects the cube root of
 * -pi/|pi| whose real part equals S_p/(2 sqrt(p)).  Falls back to
 * gauss_sum_prime below a norm threshold or if root selection is ambiguous.
 */
GaussSumValue gtilde_prime(const EisensteinInt& pi);

/**
 * gtilde(mu, c) = (1/|c|) sum_{x mod c} (x/c)_3 e_check(mu*x/c) by brute force
 * over a full residue system (lattice basis enumeration).  N(c) <= budget.
 */
GaussSumValue gauss_sum_direct(const EisensteinInt& c, const EisensteinInt& mu,
                               int128 budget = 1000000);

/**
 * gtilde(c) for squarefree primary c via twisted multiplicativity
 * gtilde(ab) = conj((a/b)_3) gtilde(a) gtilde(b) over the prime factorization.
 * Returns 0 when c is not squarefree.
 */
GaussSumValue gtilde(const EisensteinInt& c);

struct KummerAngle {
    uint64_t p;
    double theta;        // arg(gtilde(pi)) / 2pi in [0, 1) for the canonical pi (b > 0)
    double cos2pitheta;  // = S_p / (2 sqrt(p))
};

struct SpResult {
    double Sp;
    double err_bound;
};

/** S_p together with the identity check |S_p - 2 sqrt(p) Re gtilde(pi)| small. */
SpResult kummer_sum_Sp(uint64_t p);

KummerAngle kummer_angle(uint64_t p);

/**
 * gtilde(pi)^k computed two ways: directly, and by the reduction
 * gtilde^k = (-1)^l (pi/|pi|)^l * {gtilde, conj gtilde, 1} for k = 1, 2, 0 mod 3
 * with l = (k-1)/3, (k+1)/3, k/3.  Throws if the two disagree.
 */
std::complex<double> gtilde_power(const EisensteinInt& pi, long long k);

/** The reduction formula by itself, given gt = gtilde(pi). */
std::complex<double> gtilde_power_reduced(const EisensteinInt& pi, std::complex<double> gt,
                                          long long k);

/** Enumeration of a full residue system mod c (Hermite-normal-form box). */
class ResidueSystem {
  public:
    explicit ResidueSystem(const EisensteinInt& c);
    int128 size() const { return n1_ * g2_; }
    EisensteinInt at(int128 i) const {  // i in [0, size())
        return {i % n1_, i / n1_};
    }
    /** Canonical representative of x modulo c within the box. */
    EisensteinInt reduce(const EisensteinInt& x) const;
    /** Index of the canonical representative (inverse of at). */
    int128 index(const EisensteinInt& x) const;

  private:
    EisensteinInt c_;
    int128 n1_, g2_;  // box: 0 <= a < n1, 0 <= b < g2, n1*g2 = N(c)
    int128 w1_;       // second basis vector of the ideal lattice is (w1, g2)
};

}  // namespace zomega
