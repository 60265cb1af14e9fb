#pragma once

#include <array>
#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "zomega/analytic.hpp"
#include "zomega/gauss_sum.hpp"
#include "zomega/windows.hpp"

namespace zomega {

/**
 * Memoized provider of gtilde values.  Prime values can be served by an
 * external fetcher (e.g. a disk cache); composite squarefree values are
 * assembled by twisted multiplicativity from the memoized primes.
 */
class GtildeCache {
  public:
    using PrimeFetcher = std::function<GaussSumValue(const EisensteinInt&)>;

    GtildeCache() = default;
    explicit GtildeCache(PrimeFetcher f) : fetch_(std::move(f)) {}

    GaussSumValue prime(const EisensteinInt& pi);
    GaussSumValue composite(const EisensteinInt& c);  // zero if c not squarefree
    size_t size() const { return memo_.size(); }

  private:
    PrimeFetcher fetch_;
    std::map<std::pair<long long, long long>, GaussSumValue> memo_;
};

struct KummerHistogram {
    uint64_t X{0};
    // intervals for cos(2 pi theta_p): I1 = [1/2, 1], I2 = [-1/2, 1/2), I3 = [-1, -1/2);
    // boundary ties go to the higher interval
    std::array<long long, 3> counts{{0, 0, 0}};
    std::array<double, 3> freq{{0, 0, 0}};
    long long total{0};
};

KummerHistogram kummer_histogram(uint64_t X, GtildeCache& gc);

struct ExperimentReport {
    std::string command;
    std::map<std::string, double> params;
    std::complex<double> observed{0.0, 0.0};
    double predicted{0.0};
    double ratio{0.0};
    std::string provenance;  // formula used for the prediction
};

/** Sum of S_p/(2 sqrt p) * window(p/X) over rational p == 1 mod 3 vs main term. */
ExperimentReport patterson_sum(uint64_t X, const Window& window, GtildeCache& gc);

/** Sum of gtilde(pi)^k W(N(pi)/X) over primary primes, |sum|/(X^{5/6}/log X). */
ExperimentReport power_sum_k(long long k, uint64_t X, const Window& W, GtildeCache& gc);

/** Type-I sum over primary u of gtilde(ur)(u/|u|)^ell W(N(u)/U) vs the main term. */
ExperimentReport type1_sum(const EisensteinInt& r, long long ell, double U, const Window& W,
                           GtildeCache& gc);

/** Arbitrary coefficients on squarefree primary support. */
struct SieveSequence {
    std::vector<std::pair<EisensteinInt, std::complex<double>>> support;

    double norm_sq() const;
};

/** Squarefree primary elements with B < N(b) <= 2B in canonical order. */
std::vector<EisensteinInt> squarefree_range(double B);

/** Sigma(A, B, beta) = sum over squarefree primary A < N(a) <= 2A of |sum_b beta_b (b/a)_3|^2. */
double large_sieve_form(double A, double B, const SieveSequence& beta);

struct OperatorNormResult {
    double norm{0.0};
    int dim_a{0}, dim_b{0};
    int iters{0};
    std::vector<double> rayleigh;  // Rayleigh-quotient sequence
};

/** Largest eigenvalue of the Gram form by power iteration (deterministic start). */
OperatorNormResult operator_norm(double A, double B, int max_iters = 1000, double tol = 1e-10);

/** Dense cross-check of operator_norm; requires dimension <= 64 per side. */
double operator_norm_dense(double A, double B);

struct SharpnessResult {
    std::vector<double> log_ab;     // log(N^2)
    std::vector<double> log_value;  // log(Sigma/||beta||^2)
    double slope{0.0};
};

/** Witness beta_b = conj(gtilde(b)) W(N(b)/N) at A = B = N; least-squares slope. */
SharpnessResult sharpness_probe(const std::vector<double>& Ns, const Window& W, GtildeCache& gc);

struct CorrectedSieveResult {
    double corrected{0.0};
    double uncorrected{0.0};
};

/**
 * The corrected large-sieve form: the uncorrected inner sum is
 * sum_{(b,a)=1} beta_b gtilde(b) conj((b/a)_3); the corrected version subtracts
 * c_smooth conj(gtilde(a)) N(a)^{-1/6} sum_{(b,a)=1} beta_b N(b)^{-1/6}
 * inside the square.  Both are weighted by mu^2(a) V(N(a)/A).
 */
CorrectedSieveResult corrected_sieve_sum(double A, double B, const SieveSequence& beta,
                                         const Window& V, GtildeCache& gc);

struct CombCheckResult {
    long long checked{0};
    long long mismatches{0};
};

/**
 * Exact verification (rational arithmetic) of the coefficient identity behind
 * the combinatorial decomposition: for every primary n with N(n) <= Nmax, the
 * coefficient 1/L on L-th powers of z-rough primes equals the signed count of
 * decompositions n = c * (distinct primes in (w, z]) with c != 1 w-rough,
 * minus 1/2 times the ordered 2-fold z-rough decomposition count, plus the
 * alternating j >= 3 terms.
 */
CombCheckResult comb_identity_check(int128 Nmax, int128 w, int128 z);

/** sum_a beta_a (a/|a|)^ell N(a)^{it} (k/a)_3 (diagnostic character sum). */
std::complex<double> sequence_diagnostic(const SieveSequence& beta, const EisensteinInt& k,
                                         long long ell, double t);

}  // namespace zomega
