#include "zomega/factor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace zomega {

EisensteinInt PrimaryFactorization::reassemble() const {
    EisensteinInt out = unit.to_eisenstein();
    for (int i = 0; i < lambda_exp; ++i) out = out * kLambda;
    for (const auto& [prime, exp] : factors)
        for (int i = 0; i < exp; ++i) out = out * prime;
    return out;
}

bool PrimaryFactorization::is_squarefree() const {
    if (lambda_exp > 1) return false;
    for (const auto& f : factors)
        if (f.exp > 1) return false;
    return true;
}

int PrimaryFactorization::mobius() const {
    if (!is_squarefree()) return 0;
    int k = int(factors.size()) + lambda_exp;
    return k % 2 == 0 ? 1 : -1;
}

int128 PrimaryFactorization::euler_phi() const {
    int128 phi = 1;
    for (const auto& [prime, exp] : factors) {
        int128 n = prime.norm();
        for (int i = 1; i < exp; ++i) phi = checked_mul(phi, n);
        phi = checked_mul(phi, n - 1);
    }
    return phi;
}

int PrimaryFactorization::omega() const {
    return int(factors.size()) + (lambda_exp > 0 ? 1 : 0);
}

// ---- rational helpers -------------------------------------------------------

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return uint64_t((unsigned __int128)a * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_rational_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) d >>= 1, ++s;
    // Deterministic Miller-Rabin for 64-bit inputs.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<uint32_t> primes_up_to(uint32_t limit) {
    std::vector<bool> sieve(size_t(limit) + 1, true);
    std::vector<uint32_t> out;
    for (uint64_t i = 2; i <= limit; ++i) {
        if (!sieve[i]) continue;
        out.push_back(uint32_t(i));
        for (uint64_t j = i * i; j <= limit; j += i) sieve[j] = false;
    }
    return out;
}

const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> primes = primes_up_to(1000000);
    return primes;
}

namespace {

uint64_t pollard_rho(uint64_t n) {
    // Brent's cycle-finding variant with a fixed deterministic seed schedule.
    if (n % 2 == 0) return 2;
    for (uint64_t c = 1;; ++c) {
        uint64_t x = 2, y = 2, d = 1;
        auto f = [&](uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            uint64_t diff = x > y ? x - y : y - x;
            d = diff == 0 ? n : std::gcd(diff, n);
        }
        if (d != n) return d;
    }
}

void factor_u64_into(uint64_t n, std::vector<std::pair<uint64_t, int>>& out) {
    if (n == 1) return;
    if (is_rational_prime(n)) {
        out.emplace_back(n, 1);
        return;
    }
    uint64_t d = pollard_rho(n);
    factor_u64_into(d, out);
    factor_u64_into(n / d, out);
}

}  // namespace

std::vector<std::pair<uint64_t, int>> factor_u64(uint64_t n) {
    std::vector<std::pair<uint64_t, int>> out;
    for (uint32_t p : small_primes()) {
        if (uint64_t(p) * p > n) break;
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) n /= p, ++e;
            out.emplace_back(p, e);
        }
    }
    if (n > 1) {
        std::vector<std::pair<uint64_t, int>> rest;
        factor_u64_into(n, rest);
        std::sort(rest.begin(), rest.end());
        for (size_t i = 0; i < rest.size();) {
            size_t j = i;
            int e = 0;
            while (j < rest.size() && rest[j].first == rest[i].first) e += rest[j++].second;
            out.emplace_back(rest[i].first, e);
            i = j;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

uint64_t sqrt_mod(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (powmod_u64(a, (p - 1) / 2, p) != 1) throw domain_error("sqrt_mod: not a residue");
    if (p % 4 == 3) return powmod_u64(a, (p + 1) / 4, p);
    // Tonelli-Shanks.
    uint64_t q = p - 1;
    int s = 0;
    while (q % 2 == 0) q >>= 1, ++s;
    uint64_t z = 2;
    while (powmod_u64(z, (p - 1) / 2, p) != p - 1) ++z;
    uint64_t m = uint64_t(s);
    uint64_t c = powmod_u64(z, q, p);
    uint64_t t = powmod_u64(a, q, p);
    uint64_t r = powmod_u64(a, (q + 1) / 2, p);
    while (t != 1) {
        uint64_t i = 0, tt = t;
        while (tt != 1) tt = mulmod_u64(tt, tt, p), ++i;
        uint64_t b = c;
        for (uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod_u64(b, b, p);
        m = i;
        c = mulmod_u64(b, b, p);
        t = mulmod_u64(t, c, p);
        r = mulmod_u64(r, b, p);
    }
    return r;
}

// ---- Z[w] primes ------------------------------------------------------------

namespace {

std::pair<EisensteinInt, EisensteinInt> orient_split(const EisensteinInt& prime, uint64_t p) {
    EisensteinInt pi = primary_normalize(prime).second;
    EisensteinInt bar = primary_normalize(pi.conj()).second;
    if (pi.norm() != int128(p)) throw std::logic_error("orient_split: wrong norm");
    if (pi.b < 0) std::swap(pi, bar);
    return {pi, bar};
}

}  // namespace

std::pair<EisensteinInt, EisensteinInt> split_rational_prime(uint64_t p) {
    if (p % 3 != 1) throw domain_error("split_rational_prime: p must be 1 mod 3");
    if (!is_rational_prime(p)) throw domain_error("split_rational_prime: p is not prime");
    // t = sqrt(-3) mod p; then gcd(p, t - lambda) is a prime of norm p.
    uint64_t t = sqrt_mod(p - 3 % p, p);
    EisensteinInt g = gcd(EisensteinInt(int128(p), 0), EisensteinInt(int128(t), 0) - kLambda);
    return orient_split(g, p);
}

std::pair<EisensteinInt, EisensteinInt> split_prime_direct(uint64_t p) {
    if (p % 3 != 1 || p >= 10000) throw domain_error("split_prime_direct: out of range");
    int128 amax = int128(std::ceil(2.0 * std::sqrt(double(p)))) + 1;
    for (int128 b = 1; checked_mul(b, b) * 3 <= int128(4 * p); ++b)
        for (int128 a = -amax; a <= amax; ++a) {
            EisensteinInt c{a, b};
            if (c.norm() == int128(p)) return orient_split(c, p);
        }
    throw std::logic_error("split_prime_direct: no representation found");
}

EisensteinInt inert_primary(uint64_t q) {
    if (q % 3 != 2) throw domain_error("inert_primary: q must be 2 mod 3");
    return {-int128(q), 0};
}

bool is_eisenstein_prime(const EisensteinInt& c) {
    int128 n = c.norm();
    if (n < 2) return false;
    if (n == 3) return true;  // associates of lambda
    if (n > int128(UINT64_MAX)) throw domain_error("is_eisenstein_prime: norm too large");
    uint64_t nn = uint64_t(n);
    if (is_rational_prime(nn)) return nn % 3 == 1;
    uint64_t q = uint64_t(std::llround(std::sqrt(double(nn))));
    for (uint64_t qq = q > 2 ? q - 2 : 0; qq <= q + 2; ++qq)
        if (qq * qq == nn) return qq % 3 == 2 && is_rational_prime(qq);
    return false;
}

PrimaryFactorization factor(const EisensteinInt& c) {
    if (c.is_zero()) throw domain_error("factor: zero input");
    PrimaryFactorization out;
    EisensteinInt rest = c;
    while (mod_floor(rest.norm(), 3) == 0) {
        rest = div_exact(rest, kLambda);
        ++out.lambda_exp;
    }
    auto [unit, primary] = primary_normalize(rest);
    out.unit = unit;
    if (primary.norm() > int128(UINT64_MAX)) throw domain_error("factor: norm exceeds budget");
    for (auto [p, e] : factor_u64(uint64_t(primary.norm()))) {
        if (p % 3 == 1) {
            auto [pi, bar] = split_rational_prime(p);
            for (EisensteinInt prime : {pi, bar}) {
                int k = 0;
                while (divides(prime, primary)) {
                    primary = div_exact(primary, prime);
                    ++k;
                }
                if (k > 0) out.factors.push_back({prime, k});
            }
        } else {
            if (e % 2 != 0) throw std::logic_error("factor: odd inert exponent");
            EisensteinInt q = inert_primary(p);
            int k = 0;
            while (divides(q, primary)) {
                primary = div_exact(primary, q);
                ++k;
            }
            if (k != e / 2) throw std::logic_error("factor: inert exponent mismatch");
            out.factors.push_back({q, k});
        }
    }
    if (primary != EisensteinInt(1, 0)) throw std::logic_error("factor: leftover cofactor");
    std::sort(out.factors.begin(), out.factors.end(), [](const PrimePower& x, const PrimePower& y) {
        if (x.prime.norm() != y.prime.norm()) return x.prime.norm() < y.prime.norm();
        if (x.prime.a != y.prime.a) return x.prime.a < y.prime.a;
        return x.prime.b < y.prime.b;
    });
    return out;
}

MultiplicativeInfo multiplicative_functions(const EisensteinInt& c) {
    if (!c.is_primary()) throw domain_error("multiplicative_functions: input must be primary");
    PrimaryFactorization f = factor(c);
    return {f.mobius(), f.euler_phi(), f.omega(), f.is_squarefree()};
}

// ---- enumeration ------------------------------------------------------------

namespace {

template <typename F>
void scan_primary(int128 lo, int128 hi, F&& visit) {
    // N(a + bw) = (a - b/2)^2 + 3b^2/4, so |b| <= 2*sqrt(hi/3).
    double hid = double(hi);
    int128 bmax = int128(std::floor(2.0 * std::sqrt(hid / 3.0))) + 2;
    for (int128 b = -(bmax / 3) * 3; b <= bmax; b += 3) {
        double disc = 4.0 * hid - 3.0 * double(b) * double(b);
        if (disc < 0) continue;
        double sq = std::sqrt(disc);
        int128 alo = int128(std::floor((double(b) - sq) / 2.0)) - 2;
        int128 ahi = int128(std::ceil((double(b) + sq) / 2.0)) + 2;
        int128 a = alo + mod_floor(1 - alo, 3);  // first a == 1 (mod 3)
        for (; a <= ahi; a += 3) {
            EisensteinInt c{a, b};
            int128 n = c.norm();
            if (n > lo && n <= hi) visit(c);
        }
    }
}

void sort_canonical(std::vector<EisensteinInt>& v) {
    std::sort(v.begin(), v.end(), [](const EisensteinInt& x, const EisensteinInt& y) {
        if (x.norm() != y.norm()) return x.norm() < y.norm();
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
}

}  // namespace

std::vector<EisensteinInt> enumerate_primary(int128 lo, int128 hi, PrimaryPredicate pred) {
    std::vector<EisensteinInt> out;
    scan_primary(lo, hi, [&](const EisensteinInt& c) {
        switch (pred) {
            case PrimaryPredicate::All:
                out.push_back(c);
                break;
            case PrimaryPredicate::Prime:
                if (is_eisenstein_prime(c)) out.push_back(c);
                break;
            case PrimaryPredicate::Squarefree:
                if (c.norm() == 1 || factor(c).is_squarefree()) out.push_back(c);
                break;
        }
    });
    sort_canonical(out);
    return out;
}

std::vector<EisensteinInt> enumerate_primary_wrough(int128 lo, int128 hi, int128 w) {
    std::vector<EisensteinInt> out;
    scan_primary(lo, hi, [&](const EisensteinInt& c) {
        if (c.norm() == 1) {
            out.push_back(c);
            return;
        }
        for (const auto& f : factor(c).factors)
            if (f.prime.norm() <= w) return;
        out.push_back(c);
    });
    sort_canonical(out);
    return out;
}

std::vector<EisensteinInt> enumerate_all(int128 hi) {
    std::vector<EisensteinInt> out;
    double hid = double(hi);
    int128 bmax = int128(std::floor(2.0 * std::sqrt(hid / 3.0))) + 2;
    for (int128 b = -bmax; b <= bmax; ++b) {
        double disc = hid - 0.75 * double(b) * double(b);
        if (disc < 0) continue;
        double sq = std::sqrt(disc);
        int128 alo = int128(std::floor(0.5 * double(b) - sq)) - 2;
        int128 ahi = int128(std::ceil(0.5 * double(b) + sq)) + 2;
        for (int128 a = alo; a <= ahi; ++a) {
            EisensteinInt c{a, b};
            if (c.norm() <= hi) out.push_back(c);
        }
    }
    sort_canonical(out);
    return out;
}

}  // namespace zomega
