#pragma once
// Density-versus-storage tradeoff: the smallest station density meeting an
// outage cap when the average total storage lambda*S is held fixed.

#include <span>
#include <vector>

#include "stocache/analytic.hpp"
#include "stocache/params.hpp"

namespace stocache {

struct TradeoffFixed {
    double target_rate;
    double alpha;
    double file_length;
    double gamma;
    double snr_db;
};

struct TradeoffQuery {
    double s_total;   // average total storage lambda*S, nats per unit area
    double p_dagger;  // outage cap, in (0, 1)
    TradeoffFixed fixed;
    double bracket_lo = 1e-4;
    double bracket_hi = 10.0;
    double tol = 1e-6;  // lambda tolerance of the bisection
    QuadratureConfig quad{};

    void validate() const;
};

struct TradeoffPoint {
    double s_total;
    double lambda_star;
    double achieved_outage;
    bool feasible;
};

// Outage probability with S = s_total / lambda substituted.
double outage_at(double lambda, const TradeoffQuery& query);

// Smallest lambda in the bracket with outage <= p_dagger. The outage is not
// assumed monotone in lambda under the storage substitution: a geometric
// scan (64 points) locates the leftmost sign change first, and a
// golden-section dip search rescues feasible pockets narrower than the scan
// spacing. When no feasible lambda exists, returns feasible = false with the
// closest approach: lambda_star at the outage minimum and achieved_outage
// equal to that minimum.
TradeoffPoint min_density(const TradeoffQuery& query);

// min_density over an ascending grid of s_total values, warm-starting each
// bracket from the previous solution (the curve is empirically
// non-increasing; the warm start falls back to the full bracket if wrong).
std::vector<TradeoffPoint> tradeoff_curve(std::span<const double> s_total_grid,
                                          const TradeoffQuery& query_template);

}  // namespace stocache
