#include "stocache/tradeoff.hpp"

#include <algorithm>
#include <cmath>

namespace stocache {

namespace {

constexpr int kScanPoints = 64;

double outage_minus_cap(double lambda, const TradeoffQuery& q) {
    return outage_at(lambda, q) - q.p_dagger;
}

// Leftmost crossing of outage = p_dagger inside [lo, hi], where f(lo) > 0
// and f(hi) <= 0; returns the feasible (right) end of the final bracket.
double bisect_crossing(double lo, double hi, const TradeoffQuery& q) {
    while (hi - lo > q.tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (outage_minus_cap(mid, q) <= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

// Golden-section minimum of f over [a, b].
std::pair<double, double> golden_min(double a, double b, const TradeoffQuery& q) {
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = outage_minus_cap(x1, q);
    double f2 = outage_minus_cap(x2, q);
    while (b - a > q.tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = outage_minus_cap(x1, q);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = outage_minus_cap(x2, q);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, outage_minus_cap(xm, q)};
}

TradeoffPoint solve_in_bracket(const TradeoffQuery& q) {
    // Geometric scan for the leftmost feasibility crossing.
    const double ratio = std::pow(q.bracket_hi / q.bracket_lo, 1.0 / (kScanPoints - 1));
    double grid[kScanPoints];
    double fval[kScanPoints];
    grid[0] = q.bracket_lo;
    for (int i = 1; i < kScanPoints; ++i) grid[i] = grid[i - 1] * ratio;
    grid[kScanPoints - 1] = q.bracket_hi;

    int first_feasible = -1;
    for (int i = 0; i < kScanPoints; ++i) {
        fval[i] = outage_minus_cap(grid[i], q);
        if (fval[i] <= 0.0) {
            first_feasible = i;
            break;
        }
    }

    if (first_feasible == 0) {
        // Already feasible at the bracket edge; nothing smaller to find here.
        return {q.s_total, grid[0], fval[0] + q.p_dagger, true};
    }
    if (first_feasible > 0) {
        const double star = bisect_crossing(grid[first_feasible - 1], grid[first_feasible], q);
        return {q.s_total, star, outage_at(star, q), true};
    }

    // No feasible grid point. A feasible pocket narrower than the scan
    // spacing can still hide near the outage minimum; refine around the grid
    // argmin before declaring infeasibility.
    int jmin = 0;
    for (int i = 1; i < kScanPoints; ++i)
        if (fval[i] < fval[jmin]) jmin = i;
    const double lo = grid[std::max(0, jmin - 1)];
    const double hi = grid[std::min(kScanPoints - 1, jmin + 1)];
    const auto [lam_min, f_min] = golden_min(lo, hi, q);

    if (f_min > 0.0) {
        // Closest approach: report where the minimum sits and how close.
        if (fval[jmin] < f_min) return {q.s_total, grid[jmin], fval[jmin] + q.p_dagger, false};
        return {q.s_total, lam_min, f_min + q.p_dagger, false};
    }
    const double star = bisect_crossing(lo, lam_min, q);
    return {q.s_total, star, outage_at(star, q), true};
}

}  // namespace

void TradeoffQuery::validate() const {
    if (!(s_total > 0.0)) throw std::invalid_argument("TradeoffQuery: s_total must be > 0");
    if (!(p_dagger > 0.0 && p_dagger < 1.0))
        throw std::invalid_argument("TradeoffQuery: p_dagger must be in (0, 1)");
    if (!(bracket_lo > 0.0 && bracket_lo < bracket_hi))
        throw std::invalid_argument("TradeoffQuery: bracket must satisfy 0 < lo < hi");
    if (!(tol > 0.0)) throw std::invalid_argument("TradeoffQuery: tol must be > 0");
}

double outage_at(double lambda, const TradeoffQuery& query) {
    if (!(lambda > 0.0)) throw std::domain_error("outage_at: lambda must be > 0");
    const NetworkParams net(lambda, query.fixed.alpha, query.fixed.snr_db,
                            query.fixed.target_rate);
    const CacheParams cache(query.s_total / lambda, query.fixed.file_length, query.fixed.gamma);
    return outage_probability(net, cache, query.quad).value;
}

TradeoffPoint min_density(const TradeoffQuery& query) {
    query.validate();
    return solve_in_bracket(query);
}

std::vector<TradeoffPoint> tradeoff_curve(std::span<const double> s_total_grid,
                                          const TradeoffQuery& query_template) {
    std::vector<TradeoffPoint> points;
    points.reserve(s_total_grid.size());
    double prev_star = -1.0;
    for (const double s_total : s_total_grid) {
        TradeoffQuery q = query_template;
        q.s_total = s_total;
        q.validate();
        if (prev_star > 0.0) {
            // The curve is empirically non-increasing; shrink the bracket to
            // just above the previous solution and fall back if that turns
            // out wrong.
            TradeoffQuery warm = q;
            warm.bracket_hi = std::min(q.bracket_hi, prev_star * 1.05);
            if (warm.bracket_lo < warm.bracket_hi) {
                const TradeoffPoint p = solve_in_bracket(warm);
                if (p.feasible) {
                    points.push_back(p);
                    prev_star = p.lambda_star;
                    continue;
                }
            }
        }
        const TradeoffPoint p = solve_in_bracket(q);
        points.push_back(p);
        if (p.feasible) prev_star = p.lambda_star;
    }
    return points;
}

}  // namespace stocache
