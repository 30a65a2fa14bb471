#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "stocache/quadrature.hpp"

using namespace stocache;

TEST_CASE("config validation") {
    CHECK_THROWS_AS(([] {
                        QuadratureConfig c;
                        c.rel_tol = 0.0;
                        c.validate();
                    }()),
                    std::invalid_argument);
    CHECK_THROWS_AS(([] {
                        QuadratureConfig c;
                        c.abs_tol = -1.0;
                        c.validate();
                    }()),
                    std::invalid_argument);
    CHECK_THROWS_AS(([] {
                        QuadratureConfig c;
                        c.max_subdivisions = 0;
                        c.validate();
                    }()),
                    std::invalid_argument);
}

TEST_CASE("polynomials and smooth integrands") {
    CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0).value ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi).value ==
          doctest::Approx(2.0).epsilon(1e-13));
    // a sharp but integrable peak needs subdivision
    const auto peaked = integrate(
        [](double x) { return 1.0 / (1e-4 + (x - 0.37) * (x - 0.37)); }, 0.0, 1.0);
    const double exact =
        (std::atan(0.63 / 0.01) + std::atan(0.37 / 0.01)) / 0.01;
    CHECK(peaked.value == doctest::Approx(exact).epsilon(1e-10));
    CHECK(peaked.error < 1e-6);
}

TEST_CASE("error estimate brackets the true error") {
    const auto r = integrate([](double x) { return std::exp(-x * x); }, 0.0, 4.0);
    const double truth = 0.5 * std::sqrt(std::numbers::pi) * std::erf(4.0);
    CHECK(std::fabs(r.value - truth) <= std::max(r.error, 1e-14));
}

TEST_CASE("semi-infinite transform") {
    CHECK(integrate_semi_infinite([](double v) { return std::exp(-v); }).value ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(integrate_semi_infinite([](double v) { return std::exp(-v) * std::cos(v); }).value ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(integrate_semi_infinite([](double v) { return v * std::exp(-3.0 * v * v); }).value ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    // super-exponential decay, the shape the coverage integrand takes
    CHECK(integrate_semi_infinite([](double v) {
              return std::exp(-0.1 * v - 0.01 * v * v);
          }).value == doctest::Approx(5.4564136076504704).epsilon(1e-11));
}

TEST_CASE("non-convergence raises") {
    QuadratureConfig tight;
    tight.rel_tol = 1e-15;
    tight.abs_tol = 1e-300;
    tight.max_subdivisions = 2;
    CHECK_THROWS_AS(
        integrate([](double x) { return 1.0 / (1e-8 + (x - 0.3333) * (x - 0.3333)); }, 0.0, 1.0,
                  tight),
        QuadratureError);
}

TEST_CASE("bad interval raises") {
    CHECK_THROWS_AS(integrate([](double x) { return x; }, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(integrate([](double x) { return x; }, 2.0, 1.0), std::invalid_argument);
}
