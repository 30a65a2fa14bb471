#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "stocache/analytic.hpp"
#include "stocache/special.hpp"

using namespace stocache;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("rho closed form and quadrature routes agree") {
    CHECK(rho(0.0, 4.0) == 0.0);
    CHECK(rho(0.0, 3.0) == 0.0);

    // frozen from the u-integral (mpmath, 17 digits)
    CHECK(rho(0.1, 4.0) == doctest::Approx(0.10170044050652346).epsilon(1e-12));
    CHECK(rho(0.2, 4.0) == doctest::Approx(0.20694044640334647).epsilon(1e-12));
    CHECK(rho(1.0, 3.0) == doctest::Approx(2.642262100350033).epsilon(1e-10));
    CHECK(rho(1.0, 5.0) == doctest::Approx(0.76666290828174422).epsilon(1e-10));

    // closed form (alpha = 4) vs the direct u-integral oracle
    for (double T : {0.05, 0.2, 1.0}) {
        CHECK(std::fabs(rho(T, 4.0) - oracles::rho_u_integral(T, 4.0)) < 1e-9);
    }
    // general-alpha quadrature vs the oracle
    for (double alpha : {2.5, 3.0, 5.0, 6.0}) {
        CHECK(std::fabs(rho(0.3, alpha) - oracles::rho_u_integral(0.3, alpha)) < 1e-8);
    }
    // tiny T puts the lower limit beyond the series split point
    CHECK(rho(1e-4, 3.0) == doctest::Approx(oracles::rho_u_integral(1e-4, 3.0)).epsilon(1e-8));

    CHECK_THROWS_AS(rho(0.1, 2.0), std::domain_error);
    CHECK_THROWS_AS(rho(0.1, 1.5), std::domain_error);
    CHECK_THROWS_AS(rho(-0.1, 4.0), std::domain_error);
}

TEST_CASE("beta equals 1 + rho for exponential interferer fading") {
    for (double alpha : {3.0, 4.0, 5.0}) {
        for (double T : {0.1, 0.2, 1.0}) {
            CHECK(std::fabs(beta(T, alpha) - (1.0 + rho(T, alpha))) <= 1e-8);
        }
    }
    CHECK(beta(0.0, 4.0) == 1.0);
}

TEST_CASE("beta against the pre-simplification double integral") {
    // independent route: 1 + 2 int_1^inf (1 - E_g e^{-m g w^{-alpha}}) w dw
    CHECK(beta(0.2, 4.0) ==
          doctest::Approx(oracles::beta_w_integral(0.2, 4.0, true)).epsilon(1e-9));
    CHECK(beta(0.5, 3.0) ==
          doctest::Approx(oracles::beta_w_integral(0.5, 3.0, true)).epsilon(1e-9));

    const FadingModel det1 = FadingModel::deterministic(1.0);
    const FadingModel det2 = FadingModel::deterministic(2.0);
    // frozen from mpmath's incomplete-gamma route
    CHECK(beta(0.2, 4.0, det1) == doctest::Approx(1.2135808359267478).epsilon(1e-12));
    CHECK(beta(0.2, 3.0, det1) == doctest::Approx(1.4310481677926473).epsilon(1e-12));
    CHECK(beta(0.5, 4.0, det2) == doctest::Approx(2.075702400413161).epsilon(1e-12));
    // and against the double-integral oracle
    CHECK(beta(0.2, 4.0, det1) ==
          doctest::Approx(oracles::beta_w_integral(0.2, 4.0, false, 1.0)).epsilon(1e-9));
    CHECK(beta(0.5, 4.0, det2) ==
          doctest::Approx(oracles::beta_w_integral(0.5, 4.0, false, 2.0)).epsilon(1e-9));
    // small-m expansion: beta ~ 1 + 2 m g0 / (alpha - 2)
    const double m = std::expm1(1e-6);
    CHECK(beta(1e-6, 4.0, det1) == doctest::Approx(1.0 + m).epsilon(1e-7));

    CHECK_THROWS_AS(beta(0.1, 2.0), std::domain_error);
}

TEST_CASE("coverage closed form anchor values") {
    // frozen from mpmath evaluations of the alpha = 4 closed form
    const AnalyticResult c1 = coverage_probability(NetworkParams(0.2, 4.0, 10.0, 0.1));
    CHECK(c1.path == EvalPath::ClosedForm);
    CHECK(c1.estimated_error == 0.0);
    CHECK(c1.value == doctest::Approx(0.87219609506932639).epsilon(1e-12));

    CHECK(coverage_probability(NetworkParams(0.2, 4.0, 10.0, 0.4)).value ==
          doctest::Approx(0.63483277894604104).epsilon(1e-12));
    // overflow regime: naive exponent a^2/(4b) ~ 2.5e3
    CHECK(coverage_probability(NetworkParams(1.0, 4.0, 10.0, 0.01)).value ==
          doctest::Approx(0.98988509786874591).epsilon(1e-10));
    CHECK(coverage_probability(NetworkParams(0.01, 4.0, 20.0, 0.05)).value ==
          doctest::Approx(0.63309197638737896).epsilon(1e-12));

    // lambda -> 0: no serving station
    CHECK(coverage_probability(NetworkParams(1e-12, 4.0, 10.0, 0.1)).value < 1e-5);
}

TEST_CASE("general quadrature path agrees with the closed form") {
    const QuadratureConfig quad;
    for (double lam : {0.05, 0.2, 1.0}) {
        for (double T : {0.1, 0.5}) {
            const NetworkParams net(lam, 4.0, 10.0, T);
            const AnalyticResult closed = coverage_probability(net);
            const AnalyticResult general = detail::coverage_general(
                lam, 4.0, T, 1.0, net.noise_power(), FadingModel::exponential(), quad);
            CHECK(general.path == EvalPath::GeneralQuadrature);
            CHECK(general.estimated_error > 0.0);
            CHECK(std::fabs(general.value - closed.value) <= 1e-6);
        }
    }
}

TEST_CASE("deterministic-fading coverage cross-check at alpha 4") {
    // With deterministic g the dispatch goes through quadrature, but at
    // alpha = 4 the integrand is still exp(-a v - b v^2), so the expQ
    // product with beta_det must match.
    const NetworkParams net(0.3, 4.0, 10.0, 0.2);
    const FadingModel det = FadingModel::deterministic(1.0);
    const AnalyticResult cov = coverage_probability(net, {}, det);
    CHECK(cov.path == EvalPath::GeneralQuadrature);
    const double b_det = beta(0.2, 4.0, det);
    const double expect =
        kPi * net.lambda * scaled_exp_q(kPi * net.lambda * b_det, std::expm1(0.2) / 10.0);
    CHECK(cov.value == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("mu invariance at fixed SNR") {
    const QuadratureConfig quad;
    const FadingModel fading = FadingModel::exponential();
    const double sigma2 = 0.1;  // SNR 10 dB at mu = 1
    const double base =
        detail::coverage_general(0.2, 4.0, 0.1, 1.0, sigma2, fading, quad).value;
    for (double c : {0.1, 10.0}) {
        const double scaled =
            detail::coverage_general(0.2, 4.0, 0.1, c, sigma2 / c, fading, quad).value;
        CHECK(std::fabs(scaled - base) <= 1e-10);
    }
}

TEST_CASE("outage probability anchors") {
    const CacheParams cache1(1.0, 1.0, 2.0);
    // storage-sweep reference curve, T = 0.1
    CHECK(outage_probability(NetworkParams(0.2, 4.0, 10.0, 0.1), cache1).value ==
          doctest::Approx(0.5639).epsilon(2e-3));
    // empty cache: outage is exactly 1
    CHECK(outage_probability(NetworkParams(0.2, 4.0, 10.0, 0.1), CacheParams(0.0, 1.0, 2.0))
              .value == 1.0);
    // density-sweep reference curve
    CHECK(std::fabs(outage_probability(NetworkParams(0.01, 4.0, 10.0, 0.2), cache1).value -
                    0.91851) < 1e-3);
}

TEST_CASE("delivery rate anchors and identities") {
    const BackhaulModel bh(0.0005, 0.0);
    const NetworkParams net01(0.2, 4.0, 10.0, 0.1);
    const NetworkParams net02(0.2, 4.0, 10.0, 0.2);

    CHECK(std::fabs(avg_delivery_rate(net01, CacheParams(0.0, 1.0, 2.0), bh).value -
                    0.0021805) < 1e-4);
    CHECK(std::fabs(avg_delivery_rate(net02, CacheParams(10.0, 1.0, 2.0), bh).value -
                    0.14121) < 1e-3);

    // C(lambda) == T kills the storage dependence: tau = coverage * T
    const BackhaulModel tight(0.02, 0.0);  // C(0.2) = 0.1 = T
    const double cov = coverage_probability(net01).value;
    for (double s : {0.0, 1.0, 50.0}) {
        CHECK(avg_delivery_rate(net01, CacheParams(s, 1.0, 2.0), tight).value ==
              doctest::Approx(cov * 0.1).epsilon(1e-12));
    }

    // consistency: tau = cov*C + (T - C)*(1 - p_out), since cov*hit = 1 - p_out
    const CacheParams cache(3.0, 1.0, 2.0);
    const double cov02 = coverage_probability(net02).value;
    const double p_out = outage_probability(net02, cache).value;
    const double tau = avg_delivery_rate(net02, cache, bh).value;
    const double capacity = backhaul_capacity(0.2, bh);
    CHECK(tau ==
          doctest::Approx(capacity * cov02 + (0.2 - capacity) * (1.0 - p_out)).epsilon(1e-12));
}

TEST_CASE("outage monotonicity on sampled grids") {
    // non-increasing in S
    double prev = 2.0;
    for (double s : {0.0, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        const double v =
            outage_probability(NetworkParams(0.2, 4.0, 10.0, 0.1), CacheParams(s, 1.0, 2.0))
                .value;
        CHECK(v <= prev + 1e-12);
        prev = v;
    }
    // non-increasing in lambda
    prev = 2.0;
    for (double lam : {0.01, 0.05, 0.1, 0.2, 0.5, 1.0}) {
        const double v =
            outage_probability(NetworkParams(lam, 4.0, 10.0, 0.2), CacheParams(1.0, 1.0, 2.0))
                .value;
        CHECK(v <= prev + 1e-12);
        prev = v;
    }
    // non-decreasing in T
    prev = -1.0;
    for (double t : {0.01, 0.05, 0.1, 0.2, 0.5, 1.0}) {
        const double v =
            outage_probability(NetworkParams(0.2, 4.0, 10.0, t), CacheParams(1.0, 1.0, 2.0))
                .value;
        CHECK(v >= prev - 1e-12);
        prev = v;
    }
}

TEST_CASE("bounds") {
    const BackhaulModel bh(0.0005, 0.0);
    for (double lam : {0.01, 0.2, 1.0}) {
        for (double t : {0.05, 0.2, 1.0}) {
            const NetworkParams net(lam, 4.0, 10.0, t);
            const CacheParams cache(2.0, 1.0, 2.0);
            const double cov = coverage_probability(net).value;
            CHECK(cov >= 0.0);
            CHECK(cov <= 1.0);
            const double tau = avg_delivery_rate(net, cache, bh).value;
            CHECK(tau >= 0.0);
            CHECK(tau <= t + 1e-12);
            const double capacity = backhaul_capacity(lam, bh);
            if (capacity < t) CHECK(tau >= cov * capacity - 1e-12);
        }
    }
}

TEST_CASE("probability clamping policy") {
    CHECK(detail::clamp_probability(1.0 + 2e-10) == 1.0);
    CHECK(detail::clamp_probability(-2e-10) == 0.0);
    CHECK(detail::clamp_probability(0.5) == 0.5);
    CHECK_THROWS_AS(detail::clamp_probability(1.0 + 1e-6), AnalyticError);
    CHECK_THROWS_AS(detail::clamp_probability(-1e-6), AnalyticError);
}

TEST_CASE("quadrature failure propagates") {
    QuadratureConfig starved;
    starved.rel_tol = 1e-14;
    starved.abs_tol = 1e-300;
    starved.max_subdivisions = 1;
    CHECK_THROWS_AS(coverage_probability(NetworkParams(0.2, 3.0, 10.0, 0.1), starved),
                    QuadratureError);
}
