#include "zomega/gauss_sum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "zomega/factor.hpp"

namespace zomega {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr uint64_t kSweepThreshold = 30000;  // below this, always use the chi-table path

struct Kahan {
    double s{0}, c{0};
    void add(double x) {
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

// Extended gcd for int128.
int128 egcd(int128 a, int128 b, int128& x, int128& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    int128 x1, y1;
    int128 g = egcd(b, a - floor_div(a, b) * b, x1, y1);
    x = y1;
    y = x1 - floor_div(a, b) * y1;
    return g;
}

}  // namespace

// ---- residue system ----------------------------------------------------------

ResidueSystem::ResidueSystem(const EisensteinInt& c) : c_(c) {
    if (c.is_zero()) throw domain_error("ResidueSystem: zero modulus");
    // The ideal (c) is generated over Z by v1 = c = (a, b) and v2 = c*w = (-b, a-b).
    int128 n = c.norm();
    int128 s, t;
    int128 g2 = egcd(c.b, c.a - c.b, s, t);
    if (g2 == 0) {  // c rational: b = 0, a - b = a != 0
        g2 = c.a >= 0 ? c.a : -c.a;
        w1_ = 0;
    } else {
        // e2 = s*v1 + t*v2 has second coordinate g2.
        w1_ = mod_floor(checked_sub(checked_mul(s, c.a), checked_mul(t, c.b)), n / g2);
    }
    g2_ = g2;
    n1_ = n / g2;
}

EisensteinInt ResidueSystem::reduce(const EisensteinInt& x) const {
    int128 k2 = floor_div(x.b, g2_);
    int128 xa = checked_sub(x.a, checked_mul(k2, w1_));
    int128 xb = x.b - k2 * g2_;
    return {mod_floor(xa, n1_), xb};
}

int128 ResidueSystem::index(const EisensteinInt& x) const {
    EisensteinInt r = reduce(x);
    return r.a + r.b * n1_;
}

// ---- additive character -------------------------------------------------------

std::complex<double> additive_character(const EisensteinInt& x, const EisensteinInt& c) {
    if (c.is_zero()) throw domain_error("additive_character: zero modulus");
    int128 n = c.norm();
    int128 t = mod_floor((x * c.conj()).trace(), n);
    return std::polar(1.0, kTwoPi * double(t) / double(n));
}

// ---- chi-table prime path -----------------------------------------------------

namespace {

uint64_t primitive_root(uint64_t p) {
    auto fac = factor_u64(p - 1);
    for (uint64_t g = 2;; ++g) {
        bool ok = true;
        for (auto [q, e] : fac)
            if (powmod_u64(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
}

}  // namespace

GaussSumValue gauss_sum_prime(const EisensteinInt& pi) {
    int128 n = pi.norm();
    if (n > int128(UINT64_MAX)) throw domain_error("gauss_sum_prime: norm too large");
    uint64_t p = uint64_t(n);
    if (p % 3 != 1 || !is_rational_prime(p))
        throw domain_error("gauss_sum_prime: norm must be a rational prime == 1 mod 3");

    uint64_t a = uint64_t(mod_floor(pi.a, p));
    uint64_t b = uint64_t(mod_floor(pi.b, p));
    uint64_t t = uint64_t(mod_floor(pi.trace(), p));
    // omega == -a * b^{-1} (mod p) since pi = a + b*omega == 0 (mod pi).
    uint64_t binv = powmod_u64(b, p - 2, p);
    uint64_t m = mulmod_u64(p - a % p, binv, p);

    uint64_t g = primitive_root(p);
    uint64_t h = powmod_u64(g, (p - 1) / 3, p);
    int s0;
    if (h == m)
        s0 = 1;
    else if (h == mulmod_u64(m, m, p))
        s0 = 2;
    else
        throw std::logic_error("gauss_sum_prime: omega calibration failed");

    // chi(g^i) = omega^{s0 * i}.
    std::vector<uint8_t> chi(p);
    {
        uint64_t x = 1;
        int c = 0;
        for (uint64_t i = 0; i + 1 < p; ++i) {
            chi[x] = uint8_t(c);
            x = mulmod_u64(x, g, p);
            c += s0;
            if (c >= 3) c -= 3;
        }
    }

    // sum_x chi(x) e(x t / p) with a renormalized rotation, Kahan-accumulated
    // into one bucket per chi value.
    Kahan re[3], im[3];
    const double step = kTwoPi / double(p);
    double cr = 0, ci = 0;
    const double rc = std::cos(step * double(t)), rs = std::sin(step * double(t));
    for (uint64_t x = 1; x < p; ++x) {
        if ((x & 255) == 1) {
            uint64_t ph = mulmod_u64(x, t, p);
            cr = std::cos(step * double(ph));
            ci = std::sin(step * double(ph));
        }
        int k = chi[x];
        re[k].add(cr);
        im[k].add(ci);
        double nc = cr * rc - ci * rs;
        ci = cr * rs + ci * rc;
        cr = nc;
    }
    std::complex<double> w1 = CubicValue::omega().to_complex();
    std::complex<double> w2 = CubicValue::omega_sq().to_complex();
    std::complex<double> sum = std::complex<double>(re[0].s, im[0].s) +
                               w1 * std::complex<double>(re[1].s, im[1].s) +
                               w2 * std::complex<double>(re[2].s, im[2].s);
    GaussSumValue out;
    out.value = sum / std::sqrt(double(p));
    out.modulus_norm = n;
    out.provenance = Provenance::fast_prime;
    out.err_bound = 3.0 * double(p) * kEps / std::sqrt(double(p)) + 1e-12;
    return out;
}

// ---- S_p sweep ----------------------------------------------------------------

double kummer_Sp(uint64_t p) {
    if (p % 3 != 1 || !is_rational_prime(p)) throw domain_error("kummer_Sp: p must be prime == 1 mod 3");
    uint64_t half = (p - 1) / 2;
    // Mark k in [1, half] iff k is a nonzero cube mod p (cubes are closed under
    // negation, so min(n^3, p - n^3) over n <= half covers each cube pair).
    std::vector<uint64_t> bits(half / 64 + 1, 0);
    uint64_t u = 1, d = 7 % p, e = 12 % p;
    {
        uint64_t mk = std::min(u, p - u) - 1;
        bits[mk >> 6] |= 1ull << (mk & 63);
    }
    for (uint64_t nn = 2; nn <= half; ++nn) {
        u += d;
        if (u >= p) u -= p;
        d += e;
        if (d >= p) d -= p;
        e += 6;
        if (e >= p) e -= p;
        uint64_t mk = std::min(u, p - u) - 1;
        bits[mk >> 6] |= 1ull << (mk & 63);
    }
    // S_p = 1 + 6 * sum over marked k of cos(2 pi k / p).
    Kahan total;
    const double step = kTwoPi / double(p);
    const double rc = std::cos(step), rs = std::sin(step);
    for (uint64_t k0 = 1; k0 <= half; k0 += 256) {
        uint64_t kend = std::min(half, k0 + 255);
        double cr = std::cos(step * double(k0));
        double ci = std::sin(step * double(k0));
        double block = 0;
        for (uint64_t k = k0; k <= kend; ++k) {
            uint64_t bit = (bits[(k - 1) >> 6] >> ((k - 1) & 63)) & 1;
            block += cr * double(bit);
            double nc = cr * rc - ci * rs;
            ci = cr * rs + ci * rc;
            cr = nc;
        }
        total.add(block);
    }
    return 1.0 + 6.0 * total.s;
}

// ---- fast prime gtilde ----------------------------------------------------------

GaussSumValue gtilde_prime(const EisensteinInt& pi) {
    int128 n = pi.norm();
    if (n > int128(UINT64_MAX)) throw domain_error("gtilde_prime: norm too large");
    uint64_t p = uint64_t(n);
    if (p < kSweepThreshold) return gauss_sum_prime(pi);

    double sp = kummer_Sp(p);
    double c0 = sp / (2.0 * std::sqrt(double(p)));
    // gtilde(pi)^3 = -pi/|pi| exactly; pick the cube root matching Re = c0.
    std::complex<double> R = -pi.to_complex() / std::sqrt(double(p));
    double phi = std::arg(R);
    double best = 1e9, second = 1e9;
    std::complex<double> pick;
    for (int k = 0; k < 3; ++k) {
        std::complex<double> root = std::polar(1.0, (phi + kTwoPi * k) / 3.0);
        double dd = std::abs(root.real() - c0);
        if (dd < best) {
            second = best;
            best = dd;
            pick = root;
        } else if (dd < second) {
            second = dd;
        }
    }
    if (best < 1e-8 && second > 1e-4) {
        GaussSumValue out;
        out.value = pick;
        out.modulus_norm = n;
        out.provenance = Provenance::fast_prime;
        out.err_bound = 1e-12;
        return out;
    }
    return gauss_sum_prime(pi);  // ambiguous root separation (rare)
}

// ---- direct path -----------------------------------------------------------------

GaussSumValue gauss_sum_direct(const EisensteinInt& c, const EisensteinInt& mu, int128 budget) {
    if (!c.is_primary()) throw domain_error("gauss_sum_direct: modulus must be primary");
    int128 n = c.norm();
    if (n > budget) throw domain_error("gauss_sum_direct: norm exceeds budget");
    if (n == 1) return {std::complex<double>(1.0, 0.0), 1, Provenance::direct, 0.0};

    // Root-of-unity table of order N(c) with exact integer phases.
    size_t nn = size_t(n);
    std::vector<std::complex<double>> roots(nn);
    for (size_t i = 0; i < nn; ++i) roots[i] = std::polar(1.0, kTwoPi * double(i) / double(nn));

    ResidueSystem rs(c);
    EisensteinInt mcc = mu * c.conj();
    Kahan re, im;
    for (int128 i = 0; i < rs.size(); ++i) {
        EisensteinInt x = rs.at(i);
        CubicValue s = cubic_symbol(x, c);
        if (s.is_zero()) continue;
        int128 t = mod_floor((x * mcc).trace(), n);
        std::complex<double> term = s.to_complex() * roots[size_t(t)];
        re.add(term.real());
        im.add(term.imag());
    }
    GaussSumValue out;
    out.value = std::complex<double>(re.s, im.s) / std::sqrt(double(n));
    out.modulus_norm = n;
    out.provenance = Provenance::direct;
    out.err_bound = 3.0 * double(n) * kEps / std::sqrt(double(n)) + 1e-12;
    return out;
}

// ---- composite path ----------------------------------------------------------------

GaussSumValue gtilde(const EisensteinInt& c) {
    if (!c.is_primary()) throw domain_error("gtilde: input must be primary");
    PrimaryFactorization f = factor(c);
    GaussSumValue out;
    out.modulus_norm = c.norm();
    out.provenance = Provenance::composite_twisted;
    if (!f.is_squarefree()) {
        out.value = 0.0;
        out.err_bound = 0.0;
        return out;
    }
    std::complex<double> val(1.0, 0.0);
    double err = 0.0;
    EisensteinInt partial{1, 0};
    for (const auto& [prime, exp] : f.factors) {
        GaussSumValue gv;
        if (is_rational_prime(uint64_t(prime.norm())))
            gv = gtilde_prime(prime);
        else
            gv = gauss_sum_direct(prime, EisensteinInt{1, 0});
        // twisted multiplicativity: gtilde(ab) = conj((a/b)_3) gtilde(a) gtilde(b)
        std::complex<double> twist = std::conj(cubic_symbol(partial, prime).to_complex());
        val = twist * val * gv.value;
        err += gv.err_bound + 4.0 * kEps;
        partial = partial * prime;
    }
    out.value = val;
    out.err_bound = err;
    return out;
}

// ---- S_p wrappers -------------------------------------------------------------------

SpResult kummer_sum_Sp(uint64_t p) {
    if (p % 3 != 1 || !is_rational_prime(p))
        throw domain_error("kummer_sum_Sp: p must be prime == 1 mod 3");
    double sp = kummer_Sp(p);
    double err = 6.0 * (double(p) / 6.0) * 800.0 * kEps + 1e-12;
    // Identity S_p = 2 sqrt(p) Re gtilde(pi).
    GaussSumValue g = gtilde_prime(split_rational_prime(p).first);
    double rhs = 2.0 * std::sqrt(double(p)) * g.value.real();
    if (std::abs(sp - rhs) > 1e-6 * std::sqrt(double(p)))
        throw std::logic_error("kummer_sum_Sp: S_p identity violated at p = " + std::to_string(p));
    return {sp, err};
}

KummerAngle kummer_angle(uint64_t p) {
    EisensteinInt pi = split_rational_prime(p).first;
    GaussSumValue g = gtilde_prime(pi);
    double theta = std::arg(g.value) / kTwoPi;
    if (theta < 0) theta += 1.0;
    return {p, theta, g.value.real()};
}

// ---- powers ----------------------------------------------------------------------------

std::complex<double> gtilde_power_reduced(const EisensteinInt& pi, std::complex<double> gt,
                                          long long k) {
    long long r = ((k % 3) + 3) % 3;
    long long l = r == 1 ? (k - 1) / 3 : (r == 2 ? (k + 1) / 3 : k / 3);
    std::complex<double> dir = pi.to_complex() / std::sqrt(double(pi.norm()));  // pi/|pi|
    // (-1)^l (pi/|pi|)^l, valid for negative l since |pi/|pi|| = 1.
    std::complex<double> base = l >= 0 ? dir : std::conj(dir);
    long long e = l >= 0 ? l : -l;
    std::complex<double> fac(1.0, 0.0);
    std::complex<double> sq = base;
    long long ee = e;
    while (ee) {
        if (ee & 1) fac *= sq;
        sq *= sq;
        ee >>= 1;
    }
    if (e % 2 == 1) fac = -fac;
    if (r == 1) return fac * gt;
    if (r == 2) return fac * std::conj(gt);
    return fac;
}

std::complex<double> gtilde_power(const EisensteinInt& pi, long long k) {
    GaussSumValue g = gtilde_prime(pi);
    // direct power (unit modulus, so negative powers conjugate)
    std::complex<double> base = k >= 0 ? g.value : std::conj(g.value);
    long long e = k >= 0 ? k : -k;
    std::complex<double> direct(1.0, 0.0);
    std::complex<double> sq = base;
    while (e) {
        if (e & 1) direct *= sq;
        sq *= sq;
        e >>= 1;
    }
    std::complex<double> reduced = gtilde_power_reduced(pi, g.value, k);
    double tol = (double(std::llabs(k)) + 3.0) * (g.err_bound + 1e-12) + 1e-9;
    if (std::abs(direct - reduced) > tol)
        throw std::logic_error("gtilde_power: direct and reduced paths disagree");
    return reduced;
}

}  // namespace zomega
