#pragma once
// Monte Carlo estimation of outage and delivery rate: PPP stations on a
// finite disk, Rayleigh fading, power-law file requests. Serves as the
// empirical check on the analytic module.

#include <cstdint>
#include <vector>

#include "stocache/params.hpp"
#include "stocache/rng.hpp"

namespace stocache {

struct SimConfig {
    int realizations = 1000;
    std::uint64_t seed = 0;
    // Simulation disk radius R = window_radius_factor / sqrt(lambda). The
    // default puts ~400*pi stations in the window; interference truncated
    // beyond R is far below Monte Carlo noise (see the edge-effect test).
    double window_radius_factor = 20.0;
    bool min_points_guard = true;  // resample empty windows

    void validate() const;
};

struct Point {
    double x;
    double y;
};

struct RealizationOutcome {
    double sinr;      // linear ratio
    bool rate_ok;     // ln(1 + SINR) > T
    bool cache_hit;   // requested file within the S/L most popular
    double delivery;  // T on hit, C(lambda) on miss, 0 on SINR failure
};

struct EstimateResult {
    double outage_mean;
    double delivery_mean;
    double outage_std_err;
    double delivery_std_err;
    long long n;
};

// One PPP draw on the disk of the given radius around the origin. Count is
// Poisson(lambda*pi*R^2), positions uniform, returned nearest-first (the
// squared radii are the arrival times of a unit-rate Poisson process).
// With the guard set, empty draws are resampled so at least one point exists.
std::vector<Point> sample_ppp(double lambda, double radius, CounterRng& rng,
                              bool min_points_guard = true);

// One network realization: nearest station serves, every other station
// interferes with its own fading draw, the requested file is an inverse-CDF
// draw from the power law.
RealizationOutcome realize(const NetworkParams& net, const CacheParams& cache,
                           const BackhaulModel& backhaul, const SimConfig& cfg, CounterRng& rng);

// cfg.realizations independent realizations, substream i for realization i.
// Aggregation is by integer event counts, so the result is bit-identical for
// a given (params, seed) regardless of execution order or worker count.
// estimate() runs realizations in parallel when built with OpenMP;
// estimate_serial() is the reference implementation kept for testing.
EstimateResult estimate(const NetworkParams& net, const CacheParams& cache,
                        const BackhaulModel& backhaul, const SimConfig& cfg);
EstimateResult estimate_serial(const NetworkParams& net, const CacheParams& cache,
                               const BackhaulModel& backhaul, const SimConfig& cfg);

}  // namespace stocache
