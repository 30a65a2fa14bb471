#include "stocache/montecarlo.hpp"

#include <cmath>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stocache {

namespace {

constexpr double kPi = std::numbers::pi;

struct Tally {
    long long ok_hit = 0;   // rate ok and cache hit -> delivery T
    long long ok_miss = 0;  // rate ok, cache miss   -> delivery C(lambda)
};

EstimateResult reduce(const Tally& t, long long n, double target_rate, double capacity) {
    const double nd = static_cast<double>(n);
    const double p_ok_hit = static_cast<double>(t.ok_hit) / nd;
    const double p_ok_miss = static_cast<double>(t.ok_miss) / nd;

    EstimateResult r{};
    r.n = n;
    r.outage_mean = 1.0 - p_ok_hit;
    r.delivery_mean = target_rate * p_ok_hit + capacity * p_ok_miss;

    if (n > 1) {
        const double bessel = nd / (nd - 1.0);
        const double var_outage = bessel * p_ok_hit * (1.0 - p_ok_hit);
        const double second_moment =
            target_rate * target_rate * p_ok_hit + capacity * capacity * p_ok_miss;
        const double var_delivery =
            bessel * std::max(0.0, second_moment - r.delivery_mean * r.delivery_mean);
        r.outage_std_err = std::sqrt(var_outage / nd);
        r.delivery_std_err = std::sqrt(var_delivery / nd);
    }
    return r;
}

}  // namespace

void SimConfig::validate() const {
    if (realizations < 1) throw std::invalid_argument("SimConfig: realizations must be >= 1");
    if (!(window_radius_factor >= 5.0))
        throw std::invalid_argument("SimConfig: window_radius_factor must be >= 5");
}

std::vector<Point> sample_ppp(double lambda, double radius, CounterRng& rng,
                              bool min_points_guard) {
    if (!(lambda > 0.0)) throw std::invalid_argument("sample_ppp: lambda must be > 0");
    if (!(radius > 0.0)) throw std::invalid_argument("sample_ppp: radius must be > 0");

    // The squared radii of a planar PPP, scaled by pi*lambda, are the arrival
    // times of a unit-rate Poisson process: cumulative Exp(1) gaps until the
    // disk area is exceeded. Points come out sorted nearest-first.
    const double area_budget = lambda * kPi * radius * radius;
    std::vector<Point> points;
    do {
        points.clear();
        double arrival = rng.exponential();
        while (arrival <= area_budget) {
            const double r = std::sqrt(arrival / (kPi * lambda));
            const double theta = 2.0 * kPi * rng.uniform();
            points.push_back({r * std::cos(theta), r * std::sin(theta)});
            arrival += rng.exponential();
        }
    } while (min_points_guard && points.empty());
    return points;
}

RealizationOutcome realize(const NetworkParams& net, const CacheParams& cache,
                           const BackhaulModel& backhaul, const SimConfig& cfg, CounterRng& rng) {
    cfg.validate();
    const double radius = cfg.window_radius_factor / std::sqrt(net.lambda);
    const double area_budget = net.lambda * kPi * radius * radius;
    const double sigma2 = net.noise_power();

    // Requested file by inverse CDF of the power law with minimum 1 and
    // shape gamma - 1; drawn first so it is shared across window sizes.
    const double u = rng.uniform();
    const bool cache_hit =
        std::pow(1.0 - u, -1.0 / (cache.gamma - 1.0)) <= 1.0 + cache.capacity_files();

    const double h = rng.exponential();  // serving-link fading, mu = 1

    // Stations nearest-first; only distances matter for the SINR, so no
    // angles are drawn here. Each non-serving station contributes its own
    // exponential fading draw. The (gap, fading) pairs are interleaved per
    // station so that enlarging the window extends the same draw sequence.
    double serving_r = -1.0;
    double interference = 0.0;
    do {
        serving_r = -1.0;
        interference = 0.0;
        double arrival = rng.exponential();
        bool first = true;
        while (arrival <= area_budget) {
            const double r = std::sqrt(arrival / (kPi * net.lambda));
            const double g = rng.exponential();
            if (first) {
                serving_r = r;
                first = false;  // nearest station serves; its g is unused
            } else {
                interference += g * std::pow(r, -net.alpha);
            }
            arrival += rng.exponential();
        }
    } while (cfg.min_points_guard && serving_r < 0.0);

    RealizationOutcome out{};
    if (serving_r < 0.0) {
        // Empty window with the guard off: no serving station.
        out.sinr = 0.0;
        out.rate_ok = false;
    } else {
        out.sinr = h * std::pow(serving_r, -net.alpha) / (sigma2 + interference);
        out.rate_ok = std::log1p(out.sinr) > net.target_rate;
    }
    out.cache_hit = cache_hit;
    if (out.rate_ok && out.cache_hit)
        out.delivery = net.target_rate;
    else if (out.rate_ok)
        out.delivery = backhaul_capacity(net.lambda, backhaul);
    else
        out.delivery = 0.0;
    return out;
}

EstimateResult estimate_serial(const NetworkParams& net, const CacheParams& cache,
                               const BackhaulModel& backhaul, const SimConfig& cfg) {
    cfg.validate();
    Tally tally;
    for (int i = 0; i < cfg.realizations; ++i) {
        CounterRng rng(cfg.seed, static_cast<std::uint64_t>(i));
        const RealizationOutcome out = realize(net, cache, backhaul, cfg, rng);
        if (out.rate_ok && out.cache_hit)
            ++tally.ok_hit;
        else if (out.rate_ok)
            ++tally.ok_miss;
    }
    return reduce(tally, cfg.realizations, net.target_rate,
                  backhaul_capacity(net.lambda, backhaul));
}

EstimateResult estimate(const NetworkParams& net, const CacheParams& cache,
                        const BackhaulModel& backhaul, const SimConfig& cfg) {
    cfg.validate();
    long long ok_hit = 0, ok_miss = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : ok_hit, ok_miss)
#endif
    for (int i = 0; i < cfg.realizations; ++i) {
        CounterRng rng(cfg.seed, static_cast<std::uint64_t>(i));
        const RealizationOutcome out = realize(net, cache, backhaul, cfg, rng);
        if (out.rate_ok && out.cache_hit)
            ++ok_hit;
        else if (out.rate_ok)
            ++ok_miss;
    }
    return reduce(Tally{ok_hit, ok_miss}, cfg.realizations, net.target_rate,
                  backhaul_capacity(net.lambda, backhaul));
}

}  // namespace stocache
