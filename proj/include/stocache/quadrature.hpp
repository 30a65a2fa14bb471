#pragma once
// Adaptive Gauss-Kronrod (G7/K15) quadrature with worst-interval refinement.

#include <functional>
#include <stdexcept>

namespace stocache {

struct QuadratureConfig {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    int max_subdivisions = 200;

    void validate() const;
};

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadResult {
    double value;
    double error;  // estimated absolute error
};

// Integrate f over the finite interval [a, b].
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadratureConfig& cfg = {});

// Integrate f over [0, inf) via the substitution v = t/(1-t), t in [0, 1).
// Suited to integrands decaying at least exponentially.
QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   const QuadratureConfig& cfg = {});

}  // namespace stocache
