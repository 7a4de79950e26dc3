#pragma once

#include <vector>

#include "sfpl/rng.hpp"
#include "sfpl/search_space.hpp"

namespace sfpl {

/// Current point of one sampler trajectory plus its random stream.
struct SamplerState {
    std::vector<double> x;
    long sweep_index = 0;
    Rng rng;

    SamplerState(std::vector<double> x0, std::uint64_t seed)
        : x(std::move(x0)), rng(seed) {}

    /// Uniform random interior start, the standard initialization.
    static SamplerState random_start(const SearchSpace& space, std::uint64_t seed) {
        Rng r(seed);
        std::vector<double> x(space.dims());
        for (std::size_t n = 0; n < x.size(); ++n)
            x[n] = space.lower(n) + space.width(n) * r.uniform();
        SamplerState s(std::move(x), seed);
        s.rng = r;
        return s;
    }
};

} // namespace sfpl
