#include "rcq/quadopt.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace rcq {

double quadratic_bound_formula(double t, double x) {
    const double t2 = t * t;
    const double denom = x + 1.0 - t2;
    if (t2 == 0.0 || denom <= 0.0) return std::numeric_limits<double>::infinity();
    return 3.0 * (3.0 + x * x + 6.0 * t2 + 3.0 / (2.0 * t2)) / denom;
}

double cardano_root() {
    const double s17 = std::sqrt(17.0);
    double x = (std::cbrt(98.0 + 18.0 * s17) + std::cbrt(98.0 - 18.0 * s17) - 1.0) / 3.0;
    for (int it = 0; it < 60; ++it) {
        const double f = ((x + 1.0) * x - 5.0) * x - 9.0;
        const double df = (3.0 * x + 2.0) * x - 5.0;
        const double step = f / df;
        x -= step;
        if (std::abs(step) < 1e-15) break;
    }
    return x;
}

namespace {

double golden_min(const std::function<double(double)>& f, double lo, double hi, double tol) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - phi * (b - a);
    double d = a + phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

QuadraticOptimum optimize_quadratic_numeric() {
    auto best_over_t = [](double x) {
        return golden_min([x](double t) { return quadratic_bound_formula(t, x); }, 1e-3, 2.0, 1e-12);
    };
    auto value_at_x = [&](double x) { return quadratic_bound_formula(best_over_t(x), x); };
    const double x = golden_min(value_at_x, 1.0, 4.0, 1e-11);
    const double t = best_over_t(x);
    return {t, x, quadratic_bound_formula(t, x)};
}

QuadraticOptimum optimize_quadratic() {
    const double x = cardano_root();
    const double t2 = (15.0 + 9.0 * x) / (((2.0 * x + 10.0) * x + 6.0) * x - 6.0);
    QuadraticOptimum opt{std::sqrt(t2), x, 6.0 * x};
    // The stationarity solution must reproduce the formula value; otherwise
    // fall back to the direct search.
    if (std::abs(quadratic_bound_formula(opt.t, opt.x) - opt.bound) > 1e-9)
        return optimize_quadratic_numeric();
    return opt;
}

}  // namespace rcq
