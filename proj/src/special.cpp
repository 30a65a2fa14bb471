#include "stocache/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stocache {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

// Lower incomplete gamma by its power series, x < a + 1:
//   gamma(a,x) = x^a e^{-x} sum_{n>=0} x^n / (a (a+1) ... (a+n)).
double gamma_lower_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n <= 500; ++n) {
        term *= x / (a + n);
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-17) break;
    }
    return sum * std::exp(a * std::log(x) - x);
}

// Upper incomplete gamma by the Lentz continued fraction, x >= a + 1.
double gamma_upper_cf(double a, double x) {
    constexpr double kTiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) break;
    }
    return std::exp(a * std::log(x) - x) * h;
}

}  // namespace

double q_function(double x) { return 0.5 * std::erfc(x / kSqrt2); }

double exp_x2_q(double x) {
    if (!(x >= 0.0)) throw std::domain_error("exp_x2_q: x must be >= 0");
    const double half_x2 = 0.5 * x * x;
    if (half_x2 <= 600.0) {
        // Both factors stay in normal range here.
        return std::exp(half_x2) * q_function(x);
    }
    // Mills-ratio asymptotic: e^{x^2/2} Q(x) = (1/(x sqrt(2 pi))) *
    //   (1 - 1/x^2 + 3/x^4 - 15/x^6 + ...); terms are far below 1e-16
    // well before the series turns.
    const double inv_x2 = 1.0 / (x * x);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 20; ++k) {
        term *= -(2 * k - 1) * inv_x2;
        sum += term;
        if (std::fabs(term) < 1e-18) break;
    }
    return sum / (x * std::sqrt(2.0 * kPi));
}

double scaled_exp_q(double a, double b) {
    if (!(a >= 0.0) || !std::isfinite(a)) throw std::domain_error("scaled_exp_q: a must be >= 0");
    if (!(b > 0.0) || !std::isfinite(b)) throw std::domain_error("scaled_exp_q: b must be > 0");
    return std::sqrt(kPi / b) * exp_x2_q(a / std::sqrt(2.0 * b));
}

double gamma_lower(double a, double x) {
    if (!(a > 0.0 && a <= 1.5)) throw std::domain_error("gamma_lower: a must be in (0, 1.5]");
    if (!(x >= 0.0)) throw std::domain_error("gamma_lower: x must be >= 0");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_lower_series(a, x);
    return std::tgamma(a) - gamma_upper_cf(a, x);
}

double upper_incomplete_gamma(double s, double x) {
    if (!(s > -1.0 && s <= 1.5) || s == 0.0)
        throw std::domain_error("upper_incomplete_gamma: s must be in (-1,0) u (0,1.5]");
    if (s > 0.0) {
        if (!(x >= 0.0)) throw std::domain_error("upper_incomplete_gamma: x must be >= 0");
        if (x == 0.0) return std::tgamma(s);
        if (x < s + 1.0) return std::tgamma(s) - gamma_lower_series(s, x);
        return gamma_upper_cf(s, x);
    }
    if (!(x > 0.0)) throw std::domain_error("upper_incomplete_gamma: x must be > 0 for s < 0");
    return (upper_incomplete_gamma(s + 1.0, x) - std::pow(x, s) * std::exp(-x)) / s;
}

double upper_gamma_excess(double s, double x) {
    if (!(s > -1.0 && s < 0.0)) throw std::domain_error("upper_gamma_excess: s must be in (-1,0)");
    if (!(x > 0.0)) throw std::domain_error("upper_gamma_excess: x must be > 0");
    // Gamma(s,x) - Gamma(s) = (gamma(s+1,x) + x^s e^{-x}) / (-s); every term
    // is positive, unlike the direct difference near x = 0.
    return (gamma_lower(s + 1.0, x) + std::pow(x, s) * std::exp(-x)) / (-s);
}

}  // namespace stocache
