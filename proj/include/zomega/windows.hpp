#pragma once

#include <functional>

namespace zomega {

/**
 * A weight window on (0, infinity): either a smooth compactly supported bump
 * on (l, r) or the sharp indicator of [l, r].  The bump is
 * W(x) = exp(1 - 1/(1 - t^2)) with t = (2x - (l + r))/(r - l), so W = 1 at the
 * midpoint and vanishes to all orders at the endpoints.
 */
struct Window {
    enum class Kind { smooth_bump, sharp };
    Kind kind{Kind::sharp};
    double l{0.0}, r{1.0};

    static Window bump(double l, double r) { return {Kind::smooth_bump, l, r}; }
    static Window sharp(double l, double r) { return {Kind::sharp, l, r}; }

    double operator()(double x) const;

    /** Mellin transform at real s: integral of W(x) x^{s-1} dx over (0, inf). */
    double mellin(double s) const;
};

/**
 * Adaptive Simpson quadrature on [a, b] to absolute tolerance abstol
 * (default 1e-10), with a recursion-depth cap.
 */
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abstol = 1e-10);

}  // namespace zomega
