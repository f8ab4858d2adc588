#pragma once

namespace rcq {

struct QuadraticOptimum {
    double t = 0.0;
    double x = 0.0;
    double bound = 0.0;  // 6x at the optimum
};

// Value of the two-parameter bound 3(3 + x^2 + 6t^2 + 3/(2t^2))/(x + 1 - t^2).
double quadratic_bound_formula(double t, double x);

// Real root of x^3 + x^2 - 5x - 9, by radicals plus a Newton polish.
double cardano_root();

// Minimizes the two-parameter bound via the stationarity conditions: x solves
// the cubic above, t^2 = (15 + 9x)/(2x^3 + 10x^2 + 6x - 6). Falls back to the
// numeric minimizer if the closed form fails its own residual check.
QuadraticOptimum optimize_quadratic();

// Nested golden-section search over (t, x); independent of the closed form.
QuadraticOptimum optimize_quadratic_numeric();

}  // namespace rcq
