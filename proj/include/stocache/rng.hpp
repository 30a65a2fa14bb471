#pragma once
// Counter-based random streams: one independent substream per realization
// index, derived from the master seed, so parallel runs reproduce the serial
// sequence exactly.

#include <cmath>
#include <cstdint>

namespace stocache {

class CounterRng {
  public:
    CounterRng(std::uint64_t master_seed, std::uint64_t stream) {
        state_ = mix(master_seed + kGolden * stream) ^ mix(stream + kGolden);
    }

    std::uint64_t next_u64() {
        state_ += kGolden;
        return mix(state_);
    }

    // [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // (0, 1]
    double uniform_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    // Exponential with unit mean.
    double exponential() { return -std::log(uniform_pos()); }

  private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace stocache
