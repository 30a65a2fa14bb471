#pragma once
// Special functions backing the closed-form and general outage expressions.

namespace stocache {

// Standard Gaussian tail probability Q(x) = 0.5 * erfc(x / sqrt(2)).
// Absolute error <= 1e-14 for |x| <= 8, relative error <= 1e-12 beyond.
double q_function(double x);

// exp(x^2/2) * Q(x) for x >= 0, evaluated without forming either factor when
// x^2/2 is large (Mills-ratio asymptotic series). Relative error <= 1e-10.
double exp_x2_q(double x);

// Integral of exp(-a*x - b*x^2) over [0, inf):
//   sqrt(pi/b) * exp(a^2/(4b)) * Q(a / sqrt(2b)),
// computed through exp_x2_q so the a^2/(4b) > 700 regime stays finite.
// Requires a >= 0, b > 0.
double scaled_exp_q(double a, double b);

// Lower incomplete gamma gamma(a, x) for a in (0, 1.5], x >= 0.
// Series below x = a + 1, continued fraction above.
double gamma_lower(double a, double x);

// Upper incomplete gamma Gamma(s, x) for s in (-1, 0) u (0, 1.5], x > 0
// (x >= 0 when s > 0). Negative s is lifted to positive parameter by
//   Gamma(s, x) = (Gamma(s+1, x) - x^s e^{-x}) / s.
double upper_incomplete_gamma(double s, double x);

// Gamma(s, x) - Gamma(s) for s in (-1, 0), x > 0, in the cancellation-free
// form (gamma_lower(s+1, x) + x^s e^{-x}) / (-s). This is the interference
// kernel of the general coverage exponent.
double upper_gamma_excess(double s, double x);

}  // namespace stocache
