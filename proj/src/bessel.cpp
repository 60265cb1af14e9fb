#include "zomega/bessel.hpp"

#include <cmath>

namespace zomega {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

double j0_series(double x) {
    // J_0(x) = sum_k (-1)^k (x^2/4)^k / (k!)^2, in long double to absorb
    // cancellation up to |x| = 16.
    long double q = (long double)(x) * x / 4.0L;
    long double term = 1.0L, sum = 1.0L;
    for (int k = 1; k <= 64; ++k) {
        term *= -q / ((long double)k * k);
        sum += term;
        if (std::abs((double)term) < 1e-20) break;
    }
    return (double)sum;
}

double j0_asymptotic(double x) {
    // J_0(x) = sqrt(2/(pi x)) [P(x) cos(x - pi/4) - Q(x) sin(x - pi/4)] with
    // Hankel coefficients a_k = a_{k-1} (2k-1)^2 / (8k), a_0 = 1; even terms
    // alternate into P, odd into Q.
    double P = 0.0, Q = 0.0;
    double a = 1.0;          // a_k
    double xp = 1.0;         // x^{-k}
    double prev = 1e300;
    for (int k = 0; k <= 34; ++k) {
        double term = a * xp;
        if (std::abs(term) > prev) break;  // asymptotic series: stop at smallest term
        prev = std::abs(term);
        int m = k / 2;
        if (k % 2 == 0)
            P += (m % 2 == 0 ? term : -term);
        else
            Q += (m % 2 == 0 ? -term : term);
        a *= double(2 * k + 1) * double(2 * k + 1) / (8.0 * double(k + 1));
        xp /= x;
        if (prev < 1e-18) break;
    }
    double chi = x - 0.25 * kPi;
    return std::sqrt(2.0 / (kPi * x)) * (P * std::cos(chi) - Q * std::sin(chi));
}

}  // namespace

double bessel_j0(double x) {
    x = std::abs(x);
    return x < 16.0 ? j0_series(x) : j0_asymptotic(x);
}

}  // namespace zomega
