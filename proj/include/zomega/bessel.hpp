#pragma once

namespace zomega {

/**
 * Bessel function J_0(x): power series for |x| < 16, Hankel asymptotic
 * expansion (coefficients generated by recurrence) beyond.  Absolute accuracy
 * better than 1e-12 on the real line.
 */
double bessel_j0(double x);

}  // namespace zomega
