#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "zomega/analytic.hpp"
#include "zomega/bessel.hpp"
#include "zomega/cubic_symbol.hpp"
#include "zomega/factor.hpp"
#include "zomega/gauss_sum.hpp"
#include "zomega/windows.hpp"

using namespace zomega;

namespace {

std::mt19937_64 rng(99);

const EisensteinInt kOne{1, 0};

}  // namespace

TEST_CASE("adaptive quadrature on known integrals") {
    CHECK(integrate([](double x) { return x * x; }, 0, 1) == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(integrate([](double x) { return std::sin(x); }, 0, M_PI) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(integrate([](double x) { return std::exp(-x); }, 0, 20) ==
          doctest::Approx(1.0 - std::exp(-20.0)).epsilon(1e-10));
}

TEST_CASE("bessel_j0 against the standard library across scales") {
    for (double x = 0.0; x < 40.0; x += 0.37)
        CHECK(std::abs(bessel_j0(x) - std::cyl_bessel_j(0.0, x)) < 1e-13);
    for (double x : {50.0, 120.0, 500.0, 1234.5, 4000.0})
        CHECK(std::abs(bessel_j0(x) - std::cyl_bessel_j(0.0, x)) < 1e-13);
    CHECK(bessel_j0(0.0) == 1.0);
    CHECK(bessel_j0(-3.0) == bessel_j0(3.0));
}

TEST_CASE("window shapes and Mellin transforms") {
    Window s = Window::sharp(0.5, 1.0);
    CHECK(s(0.4) == 0.0);
    CHECK(s(0.7) == 1.0);
    CHECK(s(1.1) == 0.0);
    // sharp Mellin closed form
    CHECK(s.mellin(1.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(s.mellin(0.0) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(s.mellin(5.0 / 6) ==
          doctest::Approx((1.0 - std::pow(0.5, 5.0 / 6)) / (5.0 / 6)).epsilon(1e-14));

    Window b = Window::bump(0.5, 1.0);
    CHECK(b(0.5) == 0.0);
    CHECK(b(1.0) == 0.0);
    CHECK(b(0.75) == 1.0);  // normalized to max 1 at the midpoint
    CHECK(b(0.6) > 0.0);
    // mellin(W, 1) = integral of W, against direct quadrature
    double direct = integrate([&](double x) { return b(x); }, 0.5, 1.0, 1e-12);
    CHECK(std::abs(b.mellin(1.0) - direct) < 1e-10);
}

TEST_CASE("Vddot at zero is half the integral of V") {
    Window b = Window::bump(0.5, 1.0);
    // substituting r^2 = x: integral r V(r^2) dr = (1/2) integral V
    double half = 0.5 * b.mellin(1.0);
    CHECK(std::abs(bessel_transform_Vddot(b, 0.0) - half) < 1e-10);
    // even in u
    CHECK(bessel_transform_Vddot(b, 3.5) == doctest::Approx(bessel_transform_Vddot(b, -3.5)));
}

TEST_CASE("Vddot decays and the oscillatory quadrature stays clean") {
    Window b = Window::bump(0.5, 1.0);
    // reference values from a fixed fine Simpson grid
    for (double u : {10.0, 50.0, 200.0, 1131.0, 1140.0, 1150.0}) {
        double fast = bessel_transform_Vddot(b, u);
        double lo = std::sqrt(0.5), hi = 1.0;
        const long n = 1 << 21;
        double h = (hi - lo) / n, c = 4.0 * M_PI * u / (3.0 * std::sqrt(3.0)), s = 0.0;
        for (long i = 0; i <= n; ++i) {
            double r = lo + i * h, w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
            s += w * r * b(r * r) * bessel_j0(c * r);
        }
        s *= h / 3.0;
        CHECK(std::abs(fast - s) < 1e-11);
    }
    CHECK(std::abs(bessel_transform_Vddot(b, 500.0)) < 1e-8);
}

TEST_CASE("Ramanujan closed form equals direct summation, squarefree d up to 10^4") {
    std::uniform_int_distribution<long long> kd(-40, 40);
    for (const EisensteinInt& d : enumerate_primary(1, 300, PrimaryPredicate::Squarefree)) {
        for (int t = 0; t < 3; ++t) {
            EisensteinInt k{kd(rng), kd(rng)};
            std::complex<double> direct = ramanujan_sum_direct(d, k);
            CHECK(std::abs(double(ramanujan_sum(d, k)) - direct.real()) < 1e-6);
            CHECK(std::abs(direct.imag()) < 1e-6);
        }
    }
    // a couple of large squarefree moduli near the oracle budget
    for (const EisensteinInt& d : enumerate_primary(9900, 10000, PrimaryPredicate::Squarefree)) {
        EisensteinInt k{5, 7};
        std::complex<double> direct = ramanujan_sum_direct(d, k);
        CHECK(std::abs(double(ramanujan_sum(d, k)) - direct.real()) < 1e-4);
        break;
    }
}

TEST_CASE("Ramanujan special values") {
    EisensteinInt pi7 = split_rational_prime(7).first;
    // c_d(0) = phi(d); c_pi(k) = -1 for k coprime to pi
    CHECK(ramanujan_sum(pi7, EisensteinInt{0, 0}) == 6);
    CHECK(ramanujan_sum(pi7, kOne) == -1);
    CHECK(ramanujan_sum(pi7, pi7) == 6);
    CHECK(ramanujan_sum(kOne, EisensteinInt{3, 1}) == 1);
}

TEST_CASE("tilde_c prefactor is the exact cube phase") {
    EisensteinInt d{4, 3};  // squarefree primary
    for (long long a = -4; a <= 4; ++a)
        for (long long b = -4; b <= 4; ++b) {
            EisensteinInt k{a, b};
            std::complex<double> expect =
                std::polar(1.0, -2.0 * M_PI * double(mod_floor(k.b, 3)) / 3.0) *
                double(ramanujan_sum(d, -k));
            CHECK(std::abs(tilde_c(d, k) - expect) < 1e-13);
        }
}

TEST_CASE("radial Poisson check: trivial and prime moduli") {
    Window V = Window::bump(0.5, 1.0);
    auto one = [](const EisensteinInt&) { return std::complex<double>(1.0, 0.0); };
    PoissonCheck c1 = poisson_radial_check(one, kOne, V, 1000.0, 1e-7);
    CHECK(c1.discrepancy < 1e-7);
    CHECK(c1.tail_bound > 0.0);

    EisensteinInt pi7 = split_rational_prime(7).first;
    PoissonCheck c7 = poisson_radial_check(one, pi7, V, 1000.0, 1e-7);
    CHECK(c7.discrepancy < 1e-7);
    CHECK(std::abs(c7.lhs - c1.lhs) < 1e-12);  // same lhs, different modulus

    // nontrivial q-periodic psi: the cubic character mod pi7
    auto chi = [&](const EisensteinInt& m) { return cubic_symbol(m, pi7).to_complex(); };
    PoissonCheck cc = poisson_radial_check(chi, pi7, V, 10000.0, 1e-6);
    CHECK(cc.discrepancy < 1e-6);
    CHECK(std::abs(cc.lhs) > 1e-3);  // non-degenerate case
}

TEST_CASE("twisted Poisson check at small moduli") {
    Window V = Window::bump(0.5, 1.0);
    EisensteinInt pi7 = split_rational_prime(7).first;
    for (double M : {1000.0, 10000.0}) {
        CHECK(poisson_twisted_check(kOne, kOne, V, M, 1e-6).discrepancy < 1e-6);
        CHECK(poisson_twisted_check(pi7, kOne, V, M, 1e-6).discrepancy < 1e-6);
        CHECK(poisson_twisted_check(pi7, pi7, V, M, 1e-6).discrepancy < 1e-6);
    }
}

TEST_CASE("Poisson check requires a certified window") {
    Window s = Window::sharp(0.5, 1.0);
    auto one = [](const EisensteinInt&) { return std::complex<double>(1.0, 0.0); };
    CHECK_THROWS(poisson_radial_check(one, kOne, s, 1000.0, 1e-6));
}

TEST_CASE("Dedekind zeta: Euler product vs direct sum") {
    for (double s : {2.0, 3.0}) {
        double euler = dedekind_zeta_partial(s, kOne, 300000.0);
        double direct = dedekind_zeta_direct(s, kOne, 300000.0);
        CHECK(std::abs(euler - direct) < 1e-4);
    }
    // removing an Euler factor: zeta(s; 1_pi) = zeta(s) * (1 - N(pi)^{-s})
    EisensteinInt pi7 = split_rational_prime(7).first;
    double full = dedekind_zeta_partial(2.0, kOne, 300000.0);
    double coprime = dedekind_zeta_partial(2.0, pi7, 300000.0);
    CHECK(std::abs(coprime - full * (1.0 - 1.0 / 49.0)) < 1e-9);
    // monotone in s
    CHECK(dedekind_zeta_partial(2.0) > dedekind_zeta_partial(3.0));
    CHECK(dedekind_zeta_partial(3.0) > 1.0);
}

TEST_CASE("sieve weights, rough flavor: lambda_1 = 1 and the prime formula") {
    double y = 40.0;
    SieveWeights w = sieve_weights_rough(y);
    CHECK(w.rough);
    CHECK(w.at(kOne) == doctest::Approx(1.0).epsilon(1e-12));
    // at a single prime: lambda_pi = -2(1-L) + (1-L)^2 - 1 with L = log N(pi)/log y,
    // from the three decompositions pi = [1,pi] = [pi,1] = [pi,pi] minus the d=1 term;
    // equivalently lambda_pi = (1-L)^2 - 2(1-L)
    EisensteinInt pi7 = split_rational_prime(7).first;
    double L = std::log(7.0) / std::log(y);
    CHECK(w.at(pi7) == doctest::Approx((1 - L) * (1 - L) - 2 * (1 - L)).epsilon(1e-10));
    // support is squarefree primary with N(d) <= y^2
    for (const auto& [key, lam] : w.lam) {
        EisensteinInt d{key.first, key.second};
        CHECK(d.is_primary());
        CHECK(multiplicative_functions(d).is_squarefree);
        CHECK(double(d.norm()) <= y * y + 1e-9);
    }
}

TEST_CASE("sieve weights, rough flavor: majorant on sampled n") {
    double y = 20.0;
    double w_level = y * y;
    SieveWeights w = sieve_weights_rough(y);
    for (const EisensteinInt& n : enumerate_primary(0, 800, PrimaryPredicate::All)) {
        double s = 0.0;
        for (const auto& [key, lam] : w.lam) {
            EisensteinInt d{key.first, key.second};
            if (divides(d, n)) s += lam;
        }
        bool rough = true;  // (n, P(w)) = 1, primes of norm <= w = y^2
        for (const PrimePower& pp : factor(n).factors)
            if (double(pp.prime.norm()) <= w_level) rough = false;
        if (rough) CHECK(s >= 1.0 - 1e-9);
        CHECK(s >= -1e-9);  // weights form a nonnegative majorant (square form)
    }
}

TEST_CASE("sieve weights, squarefree flavor: majorant and zeta limit") {
    double y = 30.0;
    SieveWeights w = sieve_weights_squarefree(y);
    CHECK_FALSE(w.rough);
    CHECK(w.at(kOne) == doctest::Approx(1.0));
    for (const EisensteinInt& n : enumerate_primary(0, 600, PrimaryPredicate::All)) {
        double s = 0.0;
        for (const auto& [key, lam] : w.lam) {
            EisensteinInt d{key.first, key.second};
            if (divides(d * d, n)) s += lam;
        }
        double mu2 = multiplicative_functions(n).is_squarefree ? 1.0 : 0.0;
        CHECK(s >= mu2 - 1e-9);
    }
    // sum over (d, pi) = 1 of lambda_d / N(d)^2 tends to 1/zeta(2; 1_pi)
    EisensteinInt pi7 = split_rational_prime(7).first;
    for (double yy : {100.0, 1000.0}) {
        SieveWeights ww = sieve_weights_squarefree(yy);
        double s = 0.0;
        for (const auto& [key, lam] : ww.lam) {
            EisensteinInt d{key.first, key.second};
            if (gcd(d, pi7).norm() == 1) s += lam / double(d.norm() * d.norm());
        }
        double target = 1.0 / dedekind_zeta_partial(2.0, pi7, 1e6);
        CHECK(std::abs(s - target) < 5.0 / std::sqrt(yy));
    }
}

TEST_CASE("constants: closed forms and the 6/5 ratio") {
    Constants c = constants();
    CHECK(c.c_smooth == doctest::Approx(std::pow(2 * M_PI, 2.0 / 3) / (3 * std::tgamma(2.0 / 3)))
                            .epsilon(1e-14));
    CHECK(c.c_sharp == doctest::Approx(c.c_smooth * 6.0 / 5.0).epsilon(1e-14));
    CHECK(c.sigma == doctest::Approx(std::pow(3.0, 2.5) / 2.0).epsilon(1e-14));
    // W -> 1_[0,1] limit relation: c_smooth * integral of x^{-1/6} over [0,1]
    CHECK(c.c_smooth * 6.0 / 5.0 == doctest::Approx(c.c_sharp));
}
