#include "stocache/params.hpp"

#include <cmath>
#include <string>

namespace stocache {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

NetworkParams::NetworkParams(double lambda_, double alpha_, double snr_db_, double target_rate_)
    : lambda(lambda_), alpha(alpha_), snr_db(snr_db_), target_rate(target_rate_) {
    require(std::isfinite(lambda) && lambda > 0.0, "NetworkParams: lambda must be > 0");
    require(std::isfinite(alpha) && alpha > 2.0, "NetworkParams: alpha must be > 2");
    require(std::isfinite(snr_db), "NetworkParams: snr_db must be finite");
    require(std::isfinite(target_rate) && target_rate > 0.0,
            "NetworkParams: target_rate must be > 0");
}

double NetworkParams::snr_linear() const { return std::pow(10.0, snr_db / 10.0); }

CacheParams::CacheParams(double storage_, double file_length_, double gamma_)
    : storage(storage_), file_length(file_length_), gamma(gamma_) {
    require(std::isfinite(storage) && storage >= 0.0, "CacheParams: storage must be >= 0");
    require(std::isfinite(file_length) && file_length > 0.0,
            "CacheParams: file_length must be > 0");
    require(std::isfinite(gamma) && gamma > 1.0, "CacheParams: gamma must be > 1");
}

BackhaulModel::BackhaulModel(double c1_, double c2_) : c1(c1_), c2(c2_) {
    require(std::isfinite(c1) && c1 > 0.0, "BackhaulModel: c1 must be > 0");
    require(std::isfinite(c2) && c2 >= 0.0, "BackhaulModel: c2 must be >= 0");
}

FadingModel FadingModel::deterministic(double g0) {
    if (!(std::isfinite(g0) && g0 > 0.0))
        throw std::invalid_argument("FadingModel: deterministic gain must be > 0");
    return FadingModel(Kind::Deterministic, g0);
}

double backhaul_capacity(double lambda, const BackhaulModel& model) {
    if (!(lambda > 0.0)) throw std::invalid_argument("backhaul_capacity: lambda must be > 0");
    return model.c1 / lambda + model.c2;
}

double cache_hit_probability(const CacheParams& cache) {
    // 1 - (L/(L+S))^(gamma-1), via expm1/log1p to keep the S ~ 0 and
    // gamma ~ 1 corners accurate.
    const double ratio = cache.storage / (cache.file_length + cache.storage);  // S/(L+S)
    return -std::expm1((cache.gamma - 1.0) * std::log1p(-ratio));
}

std::optional<BackhaulViolation> validate_backhaul_constraint(const NetworkParams& net,
                                                              const BackhaulModel& model) {
    const double capacity = backhaul_capacity(net.lambda, model);
    if (capacity < net.target_rate) return std::nullopt;
    return BackhaulViolation{capacity, net.target_rate};
}

}  // namespace stocache
