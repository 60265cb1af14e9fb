#include "zomega/experiments.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "zomega/cubic_symbol.hpp"
#include "zomega/factor.hpp"

namespace zomega {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::complex<double> unit_power(const EisensteinInt& a, long long ell) {
    if (ell == 0) return {1.0, 0.0};
    std::complex<double> dir = a.to_complex() / std::sqrt(double(a.norm()));
    std::complex<double> base = ell > 0 ? dir : std::conj(dir);
    long long e = ell > 0 ? ell : -ell;
    std::complex<double> out(1.0, 0.0);
    while (e) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

std::pair<long long, long long> key_of(const EisensteinInt& x) {
    return {(long long)(x.a), (long long)(x.b)};
}

}  // namespace

// ---- gtilde cache --------------------------------------------------------------

GaussSumValue GtildeCache::prime(const EisensteinInt& pi) {
    auto k = key_of(pi);
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    GaussSumValue v;
    int128 n = pi.norm();
    if (n <= int128(UINT64_MAX) && is_rational_prime(uint64_t(n)))
        v = fetch_ ? fetch_(pi) : gtilde_prime(pi);
    else
        v = gauss_sum_direct(pi, EisensteinInt{1, 0});
    memo_.emplace(k, v);
    return v;
}

GaussSumValue GtildeCache::composite(const EisensteinInt& c) {
    PrimaryFactorization f = factor(c);
    GaussSumValue out;
    out.modulus_norm = c.norm();
    out.provenance = Provenance::composite_twisted;
    if (!f.is_squarefree() || f.lambda_exp != 0) {
        out.value = 0.0;
        return out;
    }
    std::complex<double> val(1.0, 0.0);
    double err = 0.0;
    EisensteinInt partial{1, 0};
    for (const auto& pp : f.factors) {
        GaussSumValue gv = prime(pp.prime);
        val = std::conj(cubic_symbol(partial, pp.prime).to_complex()) * val * gv.value;
        err += gv.err_bound + 1e-15;
        partial = partial * pp.prime;
    }
    out.value = val;
    out.err_bound = err;
    return out;
}

// ---- Kummer histogram ------------------------------------------------------------

KummerHistogram kummer_histogram(uint64_t X, GtildeCache& gc) {
    if (X < 7) throw domain_error("kummer_histogram: X >= 7 required");
    KummerHistogram h;
    h.X = X;
    for (uint32_t p : primes_up_to(uint32_t(X))) {
        if (p % 3 != 1) continue;
        double c = gc.prime(split_rational_prime(p).first).value.real();
        int bin = c >= 0.5 ? 0 : (c >= -0.5 ? 1 : 2);
        ++h.counts[bin];
        ++h.total;
    }
    for (int i = 0; i < 3; ++i) h.freq[i] = double(h.counts[i]) / double(std::max(1LL, h.total));
    return h;
}

// ---- Patterson sum ----------------------------------------------------------------

ExperimentReport patterson_sum(uint64_t X, const Window& window, GtildeCache& gc) {
    ExperimentReport rep;
    rep.command = "patterson";
    rep.params["X"] = double(X);
    double obs = 0.0;
    for (uint32_t p : primes_up_to(uint32_t(X))) {
        if (p % 3 != 1) continue;
        double w = window(double(p) / double(X));
        if (w == 0.0) continue;
        obs += gc.prime(split_rational_prime(p).first).value.real() * w;
    }
    Constants cs = constants();
    double main = std::pow(double(X), 5.0 / 6.0) / std::log(double(X));
    if (window.kind == Window::Kind::sharp) {
        rep.predicted = cs.c_sharp * main;
        rep.provenance = "2(2pi)^{2/3}/(5 Gamma(2/3)) X^{5/6}/log X";
    } else {
        rep.predicted = cs.c_smooth * window.mellin(5.0 / 6.0) * main;
        rep.provenance = "(2pi)^{2/3}/(3 Gamma(2/3)) Mellin(W,5/6) X^{5/6}/log X";
    }
    rep.observed = obs;
    rep.ratio = obs / rep.predicted;
    return rep;
}

// ---- power sums --------------------------------------------------------------------

namespace {

// All primary primes pi with lo <= N(pi) <= hi (split pairs and inert -q).
std::vector<EisensteinInt> primary_primes_in(int128 lo, int128 hi) {
    std::vector<EisensteinInt> out;
    for (uint32_t p : primes_up_to(uint32_t(hi))) {
        if (p % 3 == 1 && int128(p) >= lo) {
            auto [pi1, pi2] = split_rational_prime(p);
            out.push_back(pi1);
            out.push_back(pi2);
        } else if (p % 3 == 2) {
            int128 n = int128(p) * p;
            if (n >= lo && n <= hi) out.push_back(inert_primary(p));
        }
    }
    return out;
}

}  // namespace

ExperimentReport power_sum_k(long long k, uint64_t X, const Window& W, GtildeCache& gc) {
    ExperimentReport rep;
    rep.command = "powersum";
    rep.params["k"] = double(k);
    rep.params["X"] = double(X);
    std::complex<double> obs = 0.0;
    int128 lo = int128(W.l * double(X));
    for (const EisensteinInt& pi : primary_primes_in(std::max(int128(1), lo - 1), int128(X))) {
        double w = W(double(pi.norm()) / double(X));
        if (w == 0.0) continue;
        obs += gtilde_power_reduced(pi, gc.prime(pi).value, k) * w;
    }
    rep.observed = obs;
    rep.predicted = std::pow(double(X), 5.0 / 6.0) / std::log(double(X));
    rep.ratio = std::abs(obs) / rep.predicted;
    rep.provenance = "|sum gtilde^k W| normalized by X^{5/6}/log X";
    return rep;
}

// ---- Type-I sum ---------------------------------------------------------------------

ExperimentReport type1_sum(const EisensteinInt& r, long long ell, double U, const Window& W,
                           GtildeCache& gc) {
    if (!multiplicative_functions(r).is_squarefree)
        throw domain_error("type1_sum: r must be squarefree primary");
    ExperimentReport rep;
    rep.command = "type1";
    rep.params["ell"] = double(ell);
    rep.params["U"] = U;
    rep.params["Nr"] = double(r.norm());

    std::complex<double> obs = 0.0;
    double pred_sum = 0.0;
    int128 hi = int128(W.r * U) + 1;
    for (const EisensteinInt& u : enumerate_primary(0, hi, PrimaryPredicate::All)) {
        double w = W(double(u.norm()) / U);
        if (w == 0.0) continue;
        MultiplicativeInfo mi = multiplicative_functions(u);
        if (mi.mobius == 0) continue;               // gtilde vanishes off squarefree
        if (gcd(u, r).norm() != 1) continue;        // ur not squarefree
        obs += gc.composite(u * r).value * unit_power(u, ell) * w;
        pred_sum += std::pow(double(u.norm()), -1.0 / 6.0) * w;
    }
    rep.observed = obs;
    rep.predicted = constants().c_smooth * std::pow(double(r.norm()), -1.0 / 6.0) * pred_sum;
    rep.ratio = obs.real() / rep.predicted;
    rep.provenance =
        "c_smooth N(r)^{-1/6} sum_{(u,r)=1} mu^2(u) N(u)^{-1/6} W(N(u)/U)  (ell = 0 main term)";
    return rep;
}

// ---- large sieve --------------------------------------------------------------------

double SieveSequence::norm_sq() const {
    double s = 0.0;
    for (const auto& [b, v] : support) s += std::norm(v);
    return s;
}

std::vector<EisensteinInt> squarefree_range(double B) {
    return enumerate_primary(int128(B), int128(2.0 * B), PrimaryPredicate::Squarefree);
}

double large_sieve_form(double A, double B, const SieveSequence& beta) {
    (void)B;  // the support of beta is the b-side range
    double total = 0.0;
    for (const EisensteinInt& a : squarefree_range(A)) {
        std::complex<double> inner = 0.0;
        for (const auto& [b, v] : beta.support) inner += v * cubic_symbol(b, a).to_complex();
        total += std::norm(inner);
    }
    return total;
}

namespace {

// Symbol matrix S[a][b] = (b/a)_3 over the squarefree dyadic ranges.
std::vector<std::vector<std::complex<double>>> symbol_matrix(
    const std::vector<EisensteinInt>& as, const std::vector<EisensteinInt>& bs) {
    if (double(as.size()) * double(bs.size()) > 4096.0 * 4096.0)
        throw std::runtime_error("large sieve: range budget exceeded");
    std::vector<std::vector<std::complex<double>>> S(as.size());
    for (size_t i = 0; i < as.size(); ++i) {
        S[i].resize(bs.size());
        for (size_t j = 0; j < bs.size(); ++j) S[i][j] = cubic_symbol(bs[j], as[i]).to_complex();
    }
    return S;
}

}  // namespace

OperatorNormResult operator_norm(double A, double B, int max_iters, double tol) {
    std::vector<EisensteinInt> as = squarefree_range(A);
    std::vector<EisensteinInt> bs = squarefree_range(B);
    OperatorNormResult out;
    out.dim_a = int(as.size());
    out.dim_b = int(bs.size());
    if (as.empty() || bs.empty()) return out;
    auto S = symbol_matrix(as, bs);

    std::vector<std::complex<double>> v(bs.size());
    for (size_t j = 0; j < v.size(); ++j) v[j] = 1.0 + 0.001 * double(j % 7);
    std::vector<std::complex<double>> u(as.size()), w(bs.size());
    double lam = 0.0;
    for (int it = 0; it < max_iters; ++it) {
        double vv = 0.0;
        for (const auto& x : v) vv += std::norm(x);
        // u = S v; w = S^H u; Rayleigh quotient ||Sv||^2 / ||v||^2
        double uu = 0.0;
        for (size_t i = 0; i < as.size(); ++i) {
            std::complex<double> s = 0.0;
            for (size_t j = 0; j < bs.size(); ++j) s += S[i][j] * v[j];
            u[i] = s;
            uu += std::norm(s);
        }
        double lam_new = uu / vv;
        out.rayleigh.push_back(lam_new);
        out.iters = it + 1;
        for (size_t j = 0; j < bs.size(); ++j) {
            std::complex<double> s = 0.0;
            for (size_t i = 0; i < as.size(); ++i) s += std::conj(S[i][j]) * u[i];
            w[j] = s;
        }
        double wn = 0.0;
        for (const auto& x : w) wn += std::norm(x);
        wn = std::sqrt(wn);
        for (size_t j = 0; j < bs.size(); ++j) v[j] = w[j] / wn;
        if (it > 3 && std::abs(lam_new - lam) <= tol * std::max(1.0, lam_new)) {
            out.norm = lam_new;
            return out;
        }
        lam = lam_new;
    }
    throw std::runtime_error("operator_norm: power iteration did not converge; last value " +
                             std::to_string(lam));
}

double operator_norm_dense(double A, double B) {
    std::vector<EisensteinInt> as = squarefree_range(A);
    std::vector<EisensteinInt> bs = squarefree_range(B);
    if (as.size() > 64 || bs.size() > 64)
        throw std::runtime_error("operator_norm_dense: dimension > 64");
    if (as.empty() || bs.empty()) return 0.0;
    Eigen::MatrixXcd S(as.size(), bs.size());
    for (size_t i = 0; i < as.size(); ++i)
        for (size_t j = 0; j < bs.size(); ++j) S(i, j) = cubic_symbol(bs[j], as[i]).to_complex();
    Eigen::MatrixXcd G = S.adjoint() * S;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G);
    return es.eigenvalues().maxCoeff();
}

SharpnessResult sharpness_probe(const std::vector<double>& Ns, const Window& W, GtildeCache& gc) {
    SharpnessResult out;
    for (double N : Ns) {
        SieveSequence beta;
        for (const EisensteinInt& b :
             enumerate_primary(int128(W.l * N), int128(W.r * N) + 1, PrimaryPredicate::Squarefree)) {
            double w = W(double(b.norm()) / N);
            if (w == 0.0) continue;
            beta.support.push_back({b, std::conj(gc.composite(b).value) * w});
        }
        double val = large_sieve_form(N, N, beta) / beta.norm_sq();
        out.log_ab.push_back(std::log(N * N));
        out.log_value.push_back(std::log(val));
    }
    // least-squares slope
    double n = double(out.log_ab.size());
    double sx = std::accumulate(out.log_ab.begin(), out.log_ab.end(), 0.0);
    double sy = std::accumulate(out.log_value.begin(), out.log_value.end(), 0.0);
    double sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < out.log_ab.size(); ++i) {
        sxx += out.log_ab[i] * out.log_ab[i];
        sxy += out.log_ab[i] * out.log_value[i];
    }
    out.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return out;
}

CorrectedSieveResult corrected_sieve_sum(double A, double B, const SieveSequence& beta,
                                         const Window& V, GtildeCache& gc) {
    (void)B;
    CorrectedSieveResult out;
    double c_smooth = constants().c_smooth;
    int128 hi = int128(V.r * A) + 1;
    for (const EisensteinInt& a :
         enumerate_primary(int128(V.l * A), hi, PrimaryPredicate::Squarefree)) {
        double w = V(double(a.norm()) / A);
        if (w == 0.0) continue;
        std::complex<double> inner = 0.0, smooth = 0.0;
        for (const auto& [b, v] : beta.support) {
            CubicValue s = cubic_symbol(b, a);
            if (s.is_zero()) continue;  // (b, a) != 1
            inner += v * gc.composite(b).value * std::conj(s.to_complex());
            smooth += v * std::pow(double(b.norm()), -1.0 / 6.0);
        }
        std::complex<double> corr = c_smooth * std::conj(gc.composite(a).value) *
                                    std::pow(double(a.norm()), -1.0 / 6.0) * smooth;
        out.uncorrected += w * std::norm(inner);
        out.corrected += w * std::norm(inner - corr);
    }
    return out;
}

// ---- combinatorial identity -----------------------------------------------------------

namespace {

struct Frac {
    long long n{0}, d{1};
    void reduce() {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
    }
    Frac operator+(const Frac& o) const {
        Frac r{n * o.d + o.n * d, d * o.d};
        r.reduce();
        return r;
    }
    Frac operator-(const Frac& o) const {
        Frac r{n * o.d - o.n * d, d * o.d};
        r.reduce();
        return r;
    }
    bool operator==(const Frac& o) const { return n * o.d == o.n * d; }
};

// Ordered j-tuples of nonunit elements multiplying to the exponent vector e.
long long ordered_factorizations(std::vector<int> e, int j) {
    bool trivial = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (j == 0) return trivial ? 1 : 0;
    if (trivial) return 0;
    // enumerate nonunit sub-vectors c <= e
    long long total = 0;
    std::vector<int> c(e.size(), 0);
    for (;;) {
        // increment c in mixed radix
        size_t i = 0;
        while (i < c.size()) {
            if (c[i] < e[i]) {
                ++c[i];
                break;
            }
            c[i] = 0;
            ++i;
        }
        if (i == c.size()) break;
        std::vector<int> rest(e.size());
        for (size_t t = 0; t < e.size(); ++t) rest[t] = e[t] - c[t];
        total += ordered_factorizations(rest, j - 1);
    }
    return total;
}

}  // namespace

CombCheckResult comb_identity_check(int128 Nmax, int128 w, int128 z) {
    if (!(2 <= w && w < z && z <= Nmax)) throw domain_error("comb_identity_check: need 2 <= w < z <= Nmax");
    CombCheckResult out;
    for (const EisensteinInt& n : enumerate_primary(0, Nmax, PrimaryPredicate::All)) {
        PrimaryFactorization f = factor(n);
        if (f.lambda_exp != 0) continue;  // n primary guarantees this
        size_t np = f.factors.size();

        Frac lhs{0, 1};
        if (np == 1 && f.factors[0].prime.norm() > z) lhs = Frac{1, (long long)(f.factors[0].exp)};

        // signed count over subsets of distinct primes in (w, z]
        Frac rhs{0, 1};
        std::vector<size_t> mid;  // indices of primes with w < N <= z
        for (size_t i = 0; i < np; ++i) {
            int128 nn = f.factors[i].prime.norm();
            if (nn > w && nn <= z) mid.push_back(i);
        }
        for (size_t mask = 0; mask < (size_t(1) << mid.size()); ++mask) {
            std::vector<int> rem(np);
            for (size_t i = 0; i < np; ++i) rem[i] = f.factors[i].exp;
            int bits = 0;
            for (size_t t = 0; t < mid.size(); ++t)
                if (mask & (size_t(1) << t)) {
                    --rem[mid[t]];
                    ++bits;
                }
            bool c_trivial = true, c_wrough = true;
            for (size_t i = 0; i < np; ++i)
                if (rem[i] > 0) {
                    c_trivial = false;
                    if (f.factors[i].prime.norm() <= w) c_wrough = false;
                }
            // The cofactor c may be 1 when the tuple is nonempty; only the
            // k = 0, c = 1 term (i.e. n = 1) is excluded by the "- 1" in the
            // generating identity.
            if (c_wrough && !(c_trivial && bits == 0))
                rhs = rhs + Frac{bits % 2 == 0 ? 1 : -1, 1};
        }

        // z-rough ordered decompositions (zero unless every prime of n exceeds z)
        bool zrough = true;
        for (const auto& pp : f.factors)
            if (pp.prime.norm() <= z) zrough = false;
        if (zrough && np > 0) {
            std::vector<int> e(np);
            int omega_total = 0;
            for (size_t i = 0; i < np; ++i) {
                e[i] = f.factors[i].exp;
                omega_total += f.factors[i].exp;
            }
            for (int j = 2; j <= omega_total; ++j) {
                long long cnt = ordered_factorizations(e, j);
                if (cnt == 0) continue;
                // -1/2 at j = 2; (-1)^{j+1}/j beyond
                Frac coef = j == 2 ? Frac{-1, 2} : Frac{(j % 2 == 1) ? 1 : -1, j};
                rhs = rhs + Frac{coef.n * cnt, coef.d};
            }
        }

        ++out.checked;
        if (!(lhs == rhs)) ++out.mismatches;
    }
    return out;
}

std::complex<double> sequence_diagnostic(const SieveSequence& beta, const EisensteinInt& k,
                                         long long ell, double t) {
    std::complex<double> sum = 0.0;
    for (const auto& [a, v] : beta.support) {
        std::complex<double> term = v * unit_power(a, ell) * cubic_symbol(k, a).to_complex();
        if (t != 0.0) term *= std::polar(1.0, t * std::log(double(a.norm())));
        sum += term;
    }
    return sum;
}

}  // namespace zomega
