#pragma once
// Domain parameters shared by the analytic, Monte Carlo and tradeoff paths.
//
// Conventions: rates (T, C) in nats/sec/Hz, storage and file length in nats,
// densities per unit area. Transmit-power scale mu is fixed to 1 internally;
// the user-facing knob is the SNR in dB, so the noise power is 1/SNR_linear.

#include <optional>
#include <stdexcept>

namespace stocache {

// PPP density, pathloss exponent, SNR and target bitrate.
struct NetworkParams {
    double lambda;       // SBS density per unit area, > 0
    double alpha;        // pathloss exponent, > 2
    double snr_db;       // signal-to-noise ratio in dB
    double target_rate;  // T in nats/sec/Hz, > 0

    NetworkParams(double lambda_, double alpha_, double snr_db_, double target_rate_);

    double snr_linear() const;
    // sigma^2 with mu = 1; everything downstream depends on mu, sigma^2 only
    // through their product mu*sigma^2 = 1/SNR.
    double noise_power() const { return 1.0 / snr_linear(); }
};

// Per-station cache: storage S, file length L, popularity shape gamma.
struct CacheParams {
    double storage;      // S in nats, >= 0
    double file_length;  // L in nats, > 0
    double gamma;        // popularity shape, > 1

    CacheParams(double storage_, double file_length_, double gamma_);

    // Catalog capacity in files, S/L. May be fractional; the hit probability
    // treats the file index as continuous.
    double capacity_files() const { return storage / file_length; }
};

// Backhaul rate C(lambda) = c1/lambda + c2.
struct BackhaulModel {
    double c1;  // rate x density coefficient, > 0
    double c2;  // rate floor, >= 0

    BackhaulModel(double c1_, double c2_);
};

// Interferer fading distribution for the analytic path. The serving link is
// always Rayleigh; this describes the g variables of the interference field.
class FadingModel {
  public:
    enum class Kind { ExponentialUnitMean, Deterministic };

    static FadingModel exponential() { return FadingModel(Kind::ExponentialUnitMean, 1.0); }
    static FadingModel deterministic(double g0);

    Kind kind() const { return kind_; }
    bool is_exponential() const { return kind_ == Kind::ExponentialUnitMean; }
    double value() const { return g0_; }  // deterministic gain

  private:
    FadingModel(Kind kind, double g0) : kind_(kind), g0_(g0) {}
    Kind kind_;
    double g0_;
};

double backhaul_capacity(double lambda, const BackhaulModel& model);

// 1 - (L/(L+S))^(gamma-1): mass of the power-law popularity distribution on
// the cached range [1, 1 + S/L].
double cache_hit_probability(const CacheParams& cache);

struct BackhaulViolation {
    double capacity;     // C(lambda)
    double target_rate;  // T
};

// The delivery-rate model assumes C(lambda) < T. Returns the offending pair
// when that fails; not an error, callers decide how loud to be.
std::optional<BackhaulViolation> validate_backhaul_constraint(const NetworkParams& net,
                                                              const BackhaulModel& model);

}  // namespace stocache
