#include "stocache/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace stocache {

namespace {

// 15-point Kronrod rule with the embedded 7-point Gauss rule (QUADPACK dqk15
// abscissae/weights, non-negative half).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0,
};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
};

struct Interval {
    double a, b, value, error;
};

Interval gk15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double kronrod = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    double resabs = kWgk[7] * std::fabs(fc);

    double fv[14];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        fv[2 * j] = f(center - dx);
        fv[2 * j + 1] = f(center + dx);
        const double fsum = fv[2 * j] + fv[2 * j + 1];
        kronrod += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::fabs(fv[2 * j]) + std::fabs(fv[2 * j + 1]));
        if (j % 2 == 1) gauss += kWg[j / 2] * fsum;  // Gauss nodes are the odd Kronrod nodes
    }

    const double mean = 0.5 * kronrod;
    double resasc = kWgk[7] * std::fabs(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::fabs(fv[2 * j] - mean) + std::fabs(fv[2 * j + 1] - mean));

    double err = std::fabs(kronrod - gauss) * half;
    resasc *= half;
    resabs *= half;
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double round = 50.0 * 2.22e-16 * resabs;
    err = std::max(err, round);

    return {a, b, kronrod * half, err};
}

}  // namespace

void QuadratureConfig::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw std::invalid_argument("QuadratureConfig: tolerances must be > 0");
    if (max_subdivisions < 1)
        throw std::invalid_argument("QuadratureConfig: max_subdivisions must be >= 1");
}

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(a < b)) throw std::invalid_argument("integrate: requires a < b");

    std::vector<Interval> intervals;
    intervals.reserve(64);
    intervals.push_back(gk15(f, a, b));

    for (int iter = 0; iter < cfg.max_subdivisions; ++iter) {
        double total = 0.0, err = 0.0;
        for (const auto& iv : intervals) {
            total += iv.value;
            err += iv.error;
        }
        if (err <= std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total)))
            return {total, err};

        auto worst = std::max_element(
            intervals.begin(), intervals.end(),
            [](const Interval& l, const Interval& r) { return l.error < r.error; });
        const Interval bad = *worst;
        const double mid = 0.5 * (bad.a + bad.b);
        if (mid <= bad.a || mid >= bad.b) break;  // interval no longer splittable
        *worst = gk15(f, bad.a, mid);
        intervals.push_back(gk15(f, mid, bad.b));
    }

    double total = 0.0, err = 0.0;
    for (const auto& iv : intervals) {
        total += iv.value;
        err += iv.error;
    }
    if (err <= std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total))) return {total, err};
    throw QuadratureError("adaptive quadrature did not converge within max_subdivisions");
}

QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   const QuadratureConfig& cfg) {
    auto transformed = [&f](double t) {
        if (t >= 1.0) return 0.0;
        const double om = 1.0 - t;
        const double fv = f(t / om);
        if (fv == 0.0) return 0.0;  // avoid 0 * inf when om underflows
        return fv / (om * om);
    };
    return integrate(transformed, 0.0, 1.0, cfg);
}

}  // namespace stocache
