#pragma once

#include <cstdint>

#include "sfpl/errors.hpp"

namespace sfpl {

enum class SweepOrder {
    cyclic,            ///< coordinates visited 0..N-1 every sweep
    shuffled_per_sweep ///< a fresh random permutation each sweep
};

/// Sampler configuration shared by all SFPL runs.
struct SfpConfig {
    double D = 1.0;                ///< diffusion (randomness) parameter
    int L = 30;                    ///< basis size / collocation resolution
    int sweeps = 1;                ///< number of full coordinate sweeps M
    int table_resolution = 1024;   ///< inversion lookup table size T
    std::uint64_t seed = 0;        ///< RNG seed for this trajectory
    SweepOrder sweep_order = SweepOrder::cyclic;
    int burn_in = 0;               ///< sweeps discarded from accumulation

    void validate() const {
        if (!(D > 0.0)) throw ConfigError("SfpConfig: D must be positive");
        if (L < 2) throw ConfigError("SfpConfig: L must be at least 2");
        if (sweeps < 1) throw ConfigError("SfpConfig: sweeps must be at least 1");
        if (table_resolution < 64) throw ConfigError("SfpConfig: table_resolution must be at least 64");
        if (burn_in < 0 || burn_in >= sweeps)
            throw ConfigError("SfpConfig: burn_in must lie in [0, sweeps)");
    }
};

} // namespace sfpl
