#include "stocache/analytic.hpp"

#include <cmath>
#include <numbers>

#include "stocache/special.hpp"

namespace stocache {

namespace {

constexpr double kPi = std::numbers::pi;

double rho_alpha4(double m) {
    // sqrt(e^T - 1) (pi/2 - arctan(1/sqrt(e^T - 1)))
    const double s = std::sqrt(m);
    return s * (kPi / 2.0 - std::atan(1.0 / s));
}

// Tail of int du / (1 + u^{alpha/2}) from `from` (>= 100), by the alternating
// series sum_k (-1)^{k+1} from^{1 - k h} / (k h - 1), h = alpha/2.
double rho_tail_series(double from, double half_alpha) {
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 60; ++k) {
        const double kh = k * half_alpha;
        const double term = std::pow(from, 1.0 - kh) / (kh - 1.0);
        sum += sign * term;
        if (term < 1e-18 * std::max(1.0, std::fabs(sum))) break;
        sign = -sign;
    }
    return sum;
}

// beta as a function of m = mu (e^T - 1). The +1 from the nearest-station
// distance factor is already inside: the fading kernel
//   g^{2/alpha} (Gamma(s, mg) - Gamma(s)) / (-s),  s = -2/alpha,
// is rewritten as m^{-s} g^{-s} gamma(s+1, mg) + e^{-mg} so both pieces stay
// finite at g -> 0 and nothing cancels.
double beta_from_m(double m, double alpha, const FadingModel& fading,
                   const QuadratureConfig& quad) {
    if (m == 0.0) return 1.0;
    const double s = -2.0 / alpha;
    auto kernel = [m, s](double g) {
        if (g <= 0.0) return 1.0;
        return std::pow(m * g, -s) * gamma_lower(s + 1.0, m * g) + std::exp(-m * g);
    };

    if (fading.kind() == FadingModel::Kind::Deterministic) return kernel(fading.value());

    auto integrand = [&kernel](double g) {
        const double w = std::exp(-g);
        return w == 0.0 ? 0.0 : kernel(g) * w;
    };
    return integrate_semi_infinite(integrand, quad).value;
}

}  // namespace

double rho(double target_rate, double alpha, const QuadratureConfig& quad) {
    if (!(alpha > 2.0)) throw std::domain_error("rho: alpha must be > 2 (integral diverges)");
    if (!(target_rate >= 0.0)) throw std::domain_error("rho: target_rate must be >= 0");
    const double m = std::expm1(target_rate);
    if (m == 0.0) return 0.0;
    if (alpha == 4.0) return rho_alpha4(m);

    const double half_alpha = alpha / 2.0;
    const double u0 = std::pow(m, -2.0 / alpha);
    const double split = 100.0;  // series is accurate past u = 100 for any alpha > 2
    double integral;
    if (u0 >= split) {
        integral = rho_tail_series(u0, half_alpha);
    } else {
        auto f = [half_alpha](double u) { return 1.0 / (1.0 + std::pow(u, half_alpha)); };
        integral = integrate(f, u0, split, quad).value + rho_tail_series(split, half_alpha);
    }
    return std::pow(m, 2.0 / alpha) * integral;
}

double beta(double target_rate, double alpha, const FadingModel& fading,
            const QuadratureConfig& quad) {
    if (!(alpha > 2.0)) throw std::domain_error("beta: alpha must be > 2");
    if (!(target_rate >= 0.0)) throw std::domain_error("beta: target_rate must be >= 0");
    // mu = 1; for exponential interferer fading the scale cancels against the
    // serving link anyway.
    return beta_from_m(std::expm1(target_rate), alpha, fading, quad);
}

namespace detail {

double clamp_probability(double p) {
    constexpr double kSlack = 1e-9;
    if (p < -kSlack || p > 1.0 + kSlack)
        throw AnalyticError("probability outside [0,1] beyond roundoff slack");
    return std::min(1.0, std::max(0.0, p));
}

AnalyticResult coverage_general(double lambda, double alpha, double target_rate, double mu,
                                double sigma2, const FadingModel& fading,
                                const QuadratureConfig& quad) {
    const double m_signal = mu * std::expm1(target_rate);
    // Exponential fading scales with mu, so its beta sees m = e^T - 1 only.
    const double m_beta = fading.is_exponential() ? std::expm1(target_rate) : m_signal;
    const double b = beta_from_m(m_beta, alpha, fading, quad);

    const double noise_coeff = m_signal * sigma2;
    const double lam_pi = kPi * lambda;
    const double half_alpha = alpha / 2.0;
    auto integrand = [lam_pi, b, noise_coeff, half_alpha](double v) {
        return std::exp(-lam_pi * b * v - noise_coeff * std::pow(v, half_alpha));
    };
    const QuadResult q = integrate_semi_infinite(integrand, quad);
    return {clamp_probability(lam_pi * q.value), EvalPath::GeneralQuadrature, lam_pi * q.error};
}

}  // namespace detail

AnalyticResult coverage_probability(const NetworkParams& net, const QuadratureConfig& quad,
                                    const FadingModel& fading) {
    if (net.alpha == 4.0 && fading.is_exponential()) {
        const double m = std::expm1(net.target_rate);
        const double a = kPi * net.lambda * (1.0 + rho_alpha4(m));
        const double b = m / net.snr_linear();
        const double value = kPi * net.lambda * scaled_exp_q(a, b);
        return {detail::clamp_probability(value), EvalPath::ClosedForm, 0.0};
    }
    return detail::coverage_general(net.lambda, net.alpha, net.target_rate, 1.0,
                                    net.noise_power(), fading, quad);
}

AnalyticResult outage_probability(const NetworkParams& net, const CacheParams& cache,
                                  const QuadratureConfig& quad, const FadingModel& fading) {
    const AnalyticResult cov = coverage_probability(net, quad, fading);
    const double hit = cache_hit_probability(cache);
    return {detail::clamp_probability(1.0 - cov.value * hit), cov.path,
            cov.estimated_error * hit};
}

AnalyticResult avg_delivery_rate(const NetworkParams& net, const CacheParams& cache,
                                 const BackhaulModel& backhaul, const QuadratureConfig& quad,
                                 const FadingModel& fading) {
    const AnalyticResult cov = coverage_probability(net, quad, fading);
    const double hit = cache_hit_probability(cache);
    const double capacity = backhaul_capacity(net.lambda, backhaul);
    const double per_success = capacity + (net.target_rate - capacity) * hit;
    return {cov.value * per_success, cov.path, cov.estimated_error * std::fabs(per_success)};
}

}  // namespace stocache
