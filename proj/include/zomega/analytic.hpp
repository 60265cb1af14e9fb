#pragma once

#include <complex>
#include <functional>
#include <map>
#include <utility>

#include "zomega/eisenstein.hpp"
#include "zomega/windows.hpp"

namespace zomega {

/** V-double-dot(u) = integral over r of r V(r^2) J_0(4 pi r |u| / (3 sqrt 3)). */
double bessel_transform_Vddot(const Window& V, double u);

/**
 * Empirical decay constant: max over a grid of |Vddot(u)| (1+u)^k, used to
 * certify dual-sum truncation.
 */
double vddot_decay_constant(const Window& V, int k = 4, double umax = 50.0);

/**
 * Ramanujan sum c_d(k) = sum over x mod d coprime to d of e_check(kx/d),
 * by the closed form mu(d/(d,k)) phi(d) / phi(d/(d,k)).  d squarefree primary.
 */
int64_t ramanujan_sum(const EisensteinInt& d, const EisensteinInt& k);

/** Direct-summation oracle for ramanujan_sum; N(d) <= 10^4. */
std::complex<double> ramanujan_sum_direct(const EisensteinInt& d, const EisensteinInt& k);

/** tilde_c_d(k) = e_check(-k/(3 lambda)) c_d(-k); the prefactor is e(-b_k/3). */
std::complex<double> tilde_c(const EisensteinInt& d, const EisensteinInt& k);

struct PoissonCheck {
    std::complex<double> lhs{0.0, 0.0};
    std::complex<double> rhs{0.0, 0.0};
    double discrepancy{0.0};  // |lhs - rhs| / (|lhs| + 1)
    int128 K{0};              // dual-sum truncation: N(k) <= K
    double tail_bound{0.0};   // certified bound on the omitted dual tail
};

/**
 * Radial Poisson summation check:
 *   lhs = sum over primary m of psi(m) V(N(m)/M),
 *   rhs = (4 pi M / (9 sqrt(3) N(q))) sum_k psidd(k) Vddot(|k| sqrt(M)/|q|),
 * with psidd(k) = e(-b_k/3) sum_{x mod q} psi(3 lambda x) e_check(-kx/q).
 * psi must be q-periodic.  The dual sum is truncated using the measured
 * Vddot decay constant; throws if the tail cannot be certified below tol.
 */
PoissonCheck poisson_radial_check(const std::function<std::complex<double>(const EisensteinInt&)>& psi,
                                  const EisensteinInt& q, const Window& V, double M,
                                  double tol = 1e-9);

/**
 * Twisted Poisson summation check for squarefree primary n1, n2, d = (n1, n2):
 *   lhs = sum over primary m of (m/n1)_3 conj((m/n2)_3) V(N(m)/M),
 *   rhs = the closed form with g(n1/d), conj(g(n2/d)), tilde_c_d, and
 *         Vddot(|k||d| sqrt(M)/|n1 n2|).
 */
PoissonCheck poisson_twisted_check(const EisensteinInt& n1, const EisensteinInt& n2,
                                   const Window& V, double M, double tol = 1e-9);

/**
 * zeta_{Q(w)}(s; 1_r) = sum over primary d coprime to r of N(d)^{-s}, by the
 * Euler product over primary primes with norm <= cutoff.  Requires s > 1.
 */
double dedekind_zeta_partial(double s, const EisensteinInt& r = {1, 0}, double cutoff = 1e6);

/** Direct-sum oracle for dedekind_zeta_partial (sum over N(d) <= cutoff). */
double dedekind_zeta_direct(double s, const EisensteinInt& r = {1, 0}, double cutoff = 1e6);

/**
 * Sieve weights lambda_d supported on squarefree primary d with N(d) <= y^2.
 * Rough flavor:      lambda_d = sum_{d=[e,f], N(e),N(f)<=y} mu(e) mu(f)
 *                               (1 - log N(e)/log y)(1 - log N(f)/log y),
 *   a majorant for the indicator of (n, P(w)) = 1 with w = y^2.
 * Squarefree flavor: lambda_d = sum_{d=[e,f], N(e),N(f)<=y} mu(e) mu(f),
 *   giving the majorant mu^2(n) <= sum_{d^2 | n} lambda_d.
 */
struct SieveWeights {
    double y{1.0};
    bool rough{true};
    std::map<std::pair<long long, long long>, double> lam;  // keyed by (a, b) of d

    double at(const EisensteinInt& d) const;
};

SieveWeights sieve_weights_rough(double y);
SieveWeights sieve_weights_squarefree(double y);

struct Constants {
    double c_smooth;  // (2 pi)^{2/3} / (3 Gamma(2/3))
    double c_sharp;   // 2 (2 pi)^{2/3} / (5 Gamma(2/3))
    double sigma;     // 3^{5/2} / 2
};
Constants constants();

}  // namespace zomega
