#include "zomega/windows.hpp"

#include <cmath>
#include <stdexcept>

namespace zomega {

double Window::operator()(double x) const {
    if (kind == Kind::sharp) return (x >= l && x <= r) ? 1.0 : 0.0;
    double t = (2.0 * x - (l + r)) / (r - l);
    if (t <= -1.0 || t >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - t * t));
}

double Window::mellin(double s) const {
    if (kind == Kind::sharp) {
        if (s == 0.0) return std::log(r / l);
        return (std::pow(r, s) - std::pow(l, s)) / s;
    }
    // Evaluate W first: the bump vanishes to all orders at the endpoints, so
    // the integrand is 0 there even when x^{s-1} is singular at x = 0.
    return integrate(
        [this, s](double x) {
            double w = (*this)(x);
            return w == 0.0 ? 0.0 : w * std::pow(x, s - 1.0);
        },
        l, r);
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa, double b, double fb,
               double m, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double fa, double b, double fb,
             double m, double fm, double whole, double tol, int depth) {
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(f, a, fa, m, fm, lm, flm);
    double right = simpson(f, m, fm, b, fb, rm, frm);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adapt(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double abstol) {
    if (a == b) return 0.0;
    if (a > b) return -integrate(f, b, a, abstol);
    // Split into a few panels first so narrow features are not missed by the
    // initial Simpson estimate.
    const int panels = 8;
    double h = (b - a) / panels;
    double total = 0.0;
    for (int i = 0; i < panels; ++i) {
        double x0 = a + i * h, x1 = a + (i + 1) * h, xm = 0.5 * (x0 + x1);
        double f0 = f(x0), f1 = f(x1), fm = f(xm);
        double whole = simpson(f, x0, f0, x1, f1, xm, fm);
        total += adapt(f, x0, f0, x1, f1, xm, fm, whole, abstol / panels, 48);
    }
    return total;
}

}  // namespace zomega
