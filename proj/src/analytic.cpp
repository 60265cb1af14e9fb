#include "zomega/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "zomega/bessel.hpp"
#include "zomega/cubic_symbol.hpp"
#include "zomega/factor.hpp"
#include "zomega/gauss_sum.hpp"

namespace zomega {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kSqrt3 = 1.7320508075688772935274463415058724;

// e(-b_k / 3): the exact unimodular prefactor e_check(-k/(3 lambda)).
std::complex<double> cube_phase(const EisensteinInt& k) {
    int r = int(mod_floor(k.b, 3));
    if (r == 0) return {1.0, 0.0};
    static const double s = 0.8660254037844386467637231707529362;
    // e(-1/3) = conj(w), e(-2/3) = w
    return r == 1 ? std::complex<double>{-0.5, -s} : std::complex<double>{-0.5, s};
}

}  // namespace

double bessel_transform_Vddot(const Window& V, double u) {
    double lo = std::sqrt(std::max(0.0, V.l));
    double hi = std::sqrt(V.r);
    const double c = 4.0 * kPi * std::abs(u) / (3.0 * kSqrt3);
    auto f = [&](double r) { return r * V(r * r) * bessel_j0(c * r); };
    // Segment the range so each piece spans at most one oscillation period of
    // J_0(c r); otherwise the adaptive rule can alias on a resonant grid and
    // accept a spurious value.
    int segs = std::max(1, int(std::ceil(c * (hi - lo) / kTwoPi)));
    double h = (hi - lo) / segs, tol = 1e-11 / segs, total = 0.0;
    for (int i = 0; i < segs; ++i) total += integrate(f, lo + i * h, lo + (i + 1) * h, tol);
    return total;
}

double vddot_decay_constant(const Window& V, int k, double umax) {
    double best = 0.0;
    // fine linear grid through the first lobes, then a geometric grid
    for (double u = 0.0; u <= std::min(umax, 24.0); u += 0.25) {
        double v = std::abs(bessel_transform_Vddot(V, u)) * std::pow(1.0 + u, double(k));
        best = std::max(best, v);
    }
    int floor_hits = 0;
    for (double u = 24.0; u <= umax; u *= 1.05) {
        double a = std::abs(bessel_transform_Vddot(V, u));
        // Stop once the transform sits at the quadrature noise floor; feeding
        // floor-level samples into the (1+u)^k envelope would inflate it.
        floor_hits = a < 1e-13 ? floor_hits + 1 : 0;
        if (floor_hits >= 3) break;
        best = std::max(best, a * std::pow(1.0 + u, double(k)));
    }
    return best;
}

// ---- Ramanujan sums -------------------------------------------------------------

int64_t ramanujan_sum(const EisensteinInt& d, const EisensteinInt& k) {
    if (!d.is_primary()) throw domain_error("ramanujan_sum: d must be primary");
    MultiplicativeInfo di = multiplicative_functions(d);
    if (!di.is_squarefree) throw domain_error("ramanujan_sum: d must be squarefree");
    EisensteinInt g = k.is_zero() ? d : gcd(d, k);
    EisensteinInt m = div_exact(d, g);
    MultiplicativeInfo mi = multiplicative_functions(m);
    if (mi.mobius == 0) throw std::logic_error("ramanujan_sum: non-squarefree cofactor");
    return int64_t(mi.mobius) * int64_t(di.euler_phi / mi.euler_phi);
}

std::complex<double> ramanujan_sum_direct(const EisensteinInt& d, const EisensteinInt& k) {
    if (d.norm() > 10000) throw domain_error("ramanujan_sum_direct: N(d) too large");
    ResidueSystem rs(d);
    int128 n = d.norm();
    EisensteinInt kc = k * d.conj();
    std::complex<double> sum = 0.0;
    for (int128 i = 0; i < rs.size(); ++i) {
        EisensteinInt x = rs.at(i);
        EisensteinInt g = x.is_zero() ? d : gcd(d, x);
        if (g.norm() != 1) continue;
        int128 t = mod_floor((x * kc).trace(), n);
        sum += std::polar(1.0, kTwoPi * double(t) / double(n));
    }
    return sum;
}

std::complex<double> tilde_c(const EisensteinInt& d, const EisensteinInt& k) {
    return cube_phase(k) * double(ramanujan_sum(d, -k));
}

// ---- Poisson checks -------------------------------------------------------------

namespace {

struct DualTruncation {
    int128 K;
    double tail;
};

// Smallest truncation N(k) <= K whose omitted tail is certified below tol.
// The dual argument is u = sqrt(N(k) * scale); the dual terms are bounded by
// coefbound * C_k (1+u)^{-k}; lattice points with N(k) in [T, T+dT] number
// about (2 pi / sqrt 3) dT.
DualTruncation choose_truncation(const Window& V, double scale, double coefbound, double tol) {
    if (V.kind != Window::Kind::smooth_bump)
        throw domain_error("poisson check: V must be a smooth bump (decay certificate)");
    static const int kDecay = 8;
    // The grid stops once the transform reaches the quadrature noise floor;
    // since the transform of a smooth bump keeps decaying past that point, the
    // measured envelope constant remains valid beyond the grid.
    double C = vddot_decay_constant(V, kDecay, 4096.0) * 2.0;  // measurement safety factor
    // tail <= coefbound * C * (2 pi / sqrt 3) * (1/scale) * int_{u0} 2u (1+u)^{-8} du
    //      <= coefbound * C * (2 pi / sqrt 3) * (1/scale) * (1+u0)^{-6} / 3.
    double u0 = 1.0;
    for (;;) {
        double tail = coefbound * C * (kTwoPi / kSqrt3) / scale * std::pow(1.0 + u0, -6.0) / 3.0;
        if (tail <= tol) {
            int128 K = int128(u0 * u0 / scale) + 1;
            if (K > 4000000) throw std::runtime_error("poisson check: truncation too large");
            return {K, tail};
        }
        u0 *= 1.25;
        if (u0 > 1e9) throw std::runtime_error("poisson check: tail cannot be certified");
    }
}

}  // namespace

PoissonCheck poisson_radial_check(
    const std::function<std::complex<double>(const EisensteinInt&)>& psi, const EisensteinInt& q,
    const Window& V, double M, double tol) {
    if (!q.is_primary()) throw domain_error("poisson_radial_check: q must be primary");
    int128 nq = q.norm();

    // lhs over primary m with N(m) inside the support of V(N(m)/M)
    std::complex<double> lhs = 0.0;
    int128 mhi = int128(V.r * M) + 1;
    for (const EisensteinInt& m : enumerate_primary(0, mhi, PrimaryPredicate::All))
        lhs += psi(m) * V(double(m.norm()) / M);

    // table of psi(3 lambda x) over a residue system mod q
    ResidueSystem rs(q);
    const EisensteinInt three_lambda{3, 6};
    std::vector<std::complex<double>> psi3l(size_t(rs.size()));
    double s1 = 0.0;
    for (int128 i = 0; i < rs.size(); ++i) {
        psi3l[size_t(i)] = psi(three_lambda * rs.at(i));
        s1 += std::abs(psi3l[size_t(i)]);
    }

    double pref = 4.0 * kPi * M / (9.0 * kSqrt3 * double(nq));
    double abs_tol = tol * (std::abs(lhs) + 1.0) / 3.0;
    DualTruncation tr = choose_truncation(V, M / double(nq), pref * s1, abs_tol);

    std::map<int128, double> vddot_cache;
    std::complex<double> dual = 0.0;
    for (const EisensteinInt& k : enumerate_all(tr.K)) {
        int128 nk = k.norm();
        auto it = vddot_cache.find(nk);
        if (it == vddot_cache.end()) {
            double u = std::sqrt(double(nk) * M / double(nq));
            it = vddot_cache.emplace(nk, bessel_transform_Vddot(V, u)).first;
        }
        if (std::abs(it->second) * s1 < 1e-18) continue;
        EisensteinInt kq = k * q.conj();
        std::complex<double> inner = 0.0;
        for (int128 i = 0; i < rs.size(); ++i) {
            int128 t = mod_floor((rs.at(i) * kq).trace(), nq);
            inner += psi3l[size_t(i)] * std::polar(1.0, -kTwoPi * double(t) / double(nq));
        }
        dual += cube_phase(k) * inner * it->second;
    }
    PoissonCheck out;
    out.lhs = lhs;
    out.rhs = pref * dual;
    out.discrepancy = std::abs(out.lhs - out.rhs) / (std::abs(out.lhs) + 1.0);
    out.K = tr.K;
    out.tail_bound = tr.tail;
    return out;
}

PoissonCheck poisson_twisted_check(const EisensteinInt& n1, const EisensteinInt& n2,
                                   const Window& V, double M, double tol) {
    if (!n1.is_primary() || !n2.is_primary())
        throw domain_error("poisson_twisted_check: n1, n2 must be primary");
    if (!multiplicative_functions(n1).is_squarefree || !multiplicative_functions(n2).is_squarefree)
        throw domain_error("poisson_twisted_check: n1, n2 must be squarefree");

    EisensteinInt d = gcd(n1, n2);
    EisensteinInt m1 = div_exact(n1, d);
    EisensteinInt m2 = div_exact(n2, d);
    int128 nn = n1.norm() * n2.norm();

    std::complex<double> lhs = 0.0;
    int128 mhi = int128(V.r * M) + 1;
    for (const EisensteinInt& m : enumerate_primary(0, mhi, PrimaryPredicate::All))
        lhs += cubic_symbol(m, n1).to_complex() * std::conj(cubic_symbol(m, n2).to_complex()) *
               V(double(m.norm()) / M);

    // prefactor with full Gauss sums g(c) = |c| gtilde(c)
    std::complex<double> g1 = std::sqrt(double(m1.norm())) * gtilde(m1).value;
    std::complex<double> g2 = std::sqrt(double(m2.norm())) * gtilde(m2).value;
    std::complex<double> pref = 4.0 * kPi * cubic_symbol(d, m1).to_complex() *
                                std::conj(cubic_symbol(d, m2).to_complex()) * M * g1 *
                                std::conj(g2) / (9.0 * kSqrt3 * double(nn / d.norm()));

    double phi_d = double(multiplicative_functions(d).euler_phi);
    double scale = double(d.norm()) * M / double(nn);
    double abs_tol = tol * (std::abs(lhs) + 1.0) / 3.0;
    DualTruncation tr = choose_truncation(V, scale, std::abs(pref) * std::max(phi_d, 1.0), abs_tol);

    std::map<int128, double> vddot_cache;
    std::complex<double> dual = 0.0;
    for (const EisensteinInt& k : enumerate_all(tr.K)) {
        CubicValue s1 = cubic_symbol(k, m1);
        if (s1.is_zero()) continue;
        CubicValue s2 = cubic_symbol(k, m2);
        if (s2.is_zero()) continue;
        int128 nk = k.norm();
        auto it = vddot_cache.find(nk);
        if (it == vddot_cache.end()) {
            double u = std::sqrt(double(nk) * scale);
            it = vddot_cache.emplace(nk, bessel_transform_Vddot(V, u)).first;
        }
        dual += tilde_c(d, k) * std::conj(s1.to_complex()) * s2.to_complex() * it->second;
    }
    PoissonCheck out;
    out.lhs = lhs;
    out.rhs = pref * dual;
    out.discrepancy = std::abs(out.lhs - out.rhs) / (std::abs(out.lhs) + 1.0);
    out.K = tr.K;
    out.tail_bound = tr.tail;
    return out;
}

// ---- partial Dedekind zeta --------------------------------------------------------

double dedekind_zeta_partial(double s, const EisensteinInt& r, double cutoff) {
    if (s <= 1.0) throw domain_error("dedekind_zeta_partial: need s > 1");
    PrimaryFactorization rf = factor(r);
    double prod = 1.0;
    for (uint32_t p : small_primes()) {
        if (double(p) > cutoff) break;
        if (p == 3) continue;  // the ramified prime is never primary
        if (p % 3 == 1) {
            auto [pi1, pi2] = split_rational_prime(p);
            double f = 1.0 / (1.0 - std::pow(double(p), -s));
            for (const EisensteinInt& pi : {pi1, pi2}) {
                bool excluded = false;
                for (const auto& pp : rf.factors)
                    if (pp.prime == pi) excluded = true;
                if (!excluded) prod *= f;
            }
        } else {
            if (double(p) * double(p) > cutoff) continue;
            bool excluded = false;
            for (const auto& pp : rf.factors)
                if (pp.prime == inert_primary(p)) excluded = true;
            if (!excluded) prod *= 1.0 / (1.0 - std::pow(double(p), -2.0 * s));
        }
    }
    return prod;
}

double dedekind_zeta_direct(double s, const EisensteinInt& r, double cutoff) {
    if (s <= 1.0) throw domain_error("dedekind_zeta_direct: need s > 1");
    double sum = 0.0;
    bool trivial_r = r.norm() == 1;
    for (const EisensteinInt& d : enumerate_primary(0, int128(cutoff), PrimaryPredicate::All)) {
        if (!trivial_r && gcd(d, r).norm() != 1) continue;
        sum += std::pow(double(d.norm()), -s);
    }
    return sum;
}

// ---- sieve weights ------------------------------------------------------------------

double SieveWeights::at(const EisensteinInt& d) const {
    auto it = lam.find({(long long)(d.a), (long long)(d.b)});
    return it == lam.end() ? 0.0 : it->second;
}

namespace {

SieveWeights build_sieve_weights(double y, bool rough) {
    if (y < 2.0) throw domain_error("sieve_weights: need y >= 2");
    SieveWeights out;
    out.y = y;
    out.rough = rough;
    double logy = std::log(y);

    struct Elt {
        EisensteinInt e;
        int mu;
        double wt;  // mu(e) or mu(e)(1 - log N(e)/log y)
    };
    std::vector<Elt> elts;
    for (const EisensteinInt& e : enumerate_primary(0, int128(y), PrimaryPredicate::Squarefree)) {
        int mu = multiplicative_functions(e).mobius;
        double w = rough ? mu * (1.0 - std::log(double(e.norm())) / logy) : double(mu);
        elts.push_back({e, mu, w});
    }
    for (const Elt& x : elts)
        for (const Elt& z : elts) {
            EisensteinInt g = gcd(x.e, z.e);
            EisensteinInt d = x.e * div_exact(z.e, g);  // lcm [e, f]
            out.lam[{(long long)(d.a), (long long)(d.b)}] += x.wt * z.wt;
        }
    // drop exact-cancellation dust
    for (auto it = out.lam.begin(); it != out.lam.end();)
        it = std::abs(it->second) < 1e-12 ? out.lam.erase(it) : std::next(it);
    return out;
}

}  // namespace

SieveWeights sieve_weights_rough(double y) { return build_sieve_weights(y, true); }
SieveWeights sieve_weights_squarefree(double y) { return build_sieve_weights(y, false); }

Constants constants() {
    Constants c;
    double gamma23 = std::tgamma(2.0 / 3.0);
    double t = std::pow(kTwoPi, 2.0 / 3.0);
    c.c_smooth = t / (3.0 * gamma23);
    c.c_sharp = 2.0 * t / (5.0 * gamma23);
    c.sigma = std::pow(3.0, 2.5) / 2.0;
    return c;
}

}  // namespace zomega
