#pragma once
// Outage probability and average delivery rate of the typical user: the
// general integral route (any alpha > 2, exponential or deterministic
// interferer fading) and the alpha = 4 closed forms.

#include "stocache/params.hpp"
#include "stocache/quadrature.hpp"

namespace stocache {

enum class EvalPath { GeneralQuadrature, ClosedForm };

struct AnalyticResult {
    double value;
    EvalPath path;
    double estimated_error;  // quadrature bound; 0 for the closed form
};

struct AnalyticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Normalized interference integral
//   rho(T, alpha) = (e^T-1)^{2/alpha} * int_{(e^T-1)^{-2/alpha}}^inf du / (1 + u^{alpha/2}).
// alpha = 4 uses the arctan closed form; otherwise quadrature plus an
// alternating tail series. Requires T >= 0, alpha > 2.
double rho(double target_rate, double alpha, const QuadratureConfig& quad = {});

// Coverage exponent coefficient
//   beta = (2/alpha) (e^T-1)^{2/alpha} E_g[ g^{2/alpha} (Gamma(-2/alpha, (e^T-1) g) - Gamma(-2/alpha)) ],
// including the +1 carried by the nearest-station distance factor, so the
// coverage integrand is exp(-pi lambda v beta - ...). For exponential g this
// equals 1 + rho(T, alpha); the scale of g cancels against the serving link.
double beta(double target_rate, double alpha, const FadingModel& fading = FadingModel::exponential(),
            const QuadratureConfig& quad = {});

// P[ln(1 + SINR) > T] for the typical user. Dispatches to the closed form
// (pi^{3/2} lambda / sqrt((e^T-1)/SNR) * expQ product) when alpha == 4 and
// fading is exponential, otherwise to semi-infinite quadrature.
AnalyticResult coverage_probability(const NetworkParams& net, const QuadratureConfig& quad = {},
                                    const FadingModel& fading = FadingModel::exponential());

// 1 - coverage * cache_hit (the SINR and cache events are independent).
AnalyticResult outage_probability(const NetworkParams& net, const CacheParams& cache,
                                  const QuadratureConfig& quad = {},
                                  const FadingModel& fading = FadingModel::exponential());

// coverage * (C(lambda) + (T - C(lambda)) * cache_hit), nats/sec/Hz.
// The model assumes C(lambda) < T; see validate_backhaul_constraint.
AnalyticResult avg_delivery_rate(const NetworkParams& net, const CacheParams& cache,
                                 const BackhaulModel& backhaul, const QuadratureConfig& quad = {},
                                 const FadingModel& fading = FadingModel::exponential());

namespace detail {

// General-path coverage with explicit transmit-power scale mu and noise
// sigma2 (SNR = 1/(mu*sigma2)). Exposed for the mu-invariance and
// closed-form-vs-quadrature equivalence tests.
AnalyticResult coverage_general(double lambda, double alpha, double target_rate, double mu,
                                double sigma2, const FadingModel& fading,
                                const QuadratureConfig& quad);

// Probabilities may exit quadrature a hair outside [0,1]; clamp when the
// excursion is <= 1e-9, raise AnalyticError otherwise.
double clamp_probability(double p);

}  // namespace detail

}  // namespace stocache
