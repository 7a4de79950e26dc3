#include "sfpl/problems/robot_arm.hpp"

#include <cmath>

#include "sfpl/errors.hpp"
#include "sfpl/rng.hpp"

namespace sfpl {

std::pair<double, double> robot_arm_truth(double x1, double x2) {
    return {2.0 * std::cos(x1) + 1.3 * std::cos(x1 + x2),
            2.0 * std::sin(x1) + 1.3 * std::sin(x1 + x2)};
}

Dataset robot_arm_generate(int n_samples, std::uint64_t seed, double sigma) {
    if (n_samples < 1) throw ConfigError("robot_arm_generate: n_samples must be at least 1");
    if (sigma < 0.0) throw ConfigError("robot_arm_generate: sigma must be nonnegative");

    Rng rng(seed);
    Dataset d;
    d.noise_sigma = sigma;
    d.inputs.reserve(n_samples);
    d.targets.reserve(n_samples);
    for (int s = 0; s < n_samples; ++s) {
        const bool negative_half = rng.uniform() < 0.5;
        const double x1 = negative_half ? rng.uniform(-1.932, -0.453)
                                        : rng.uniform(0.453, 1.932);
        const double x2 = rng.uniform(0.534, 3.142);
        d.inputs.push_back({x1, x2});
    }
    for (int s = 0; s < n_samples; ++s) {
        const auto [y1, y2] = robot_arm_truth(d.inputs[s][0], d.inputs[s][1]);
        d.targets.push_back({y1 + sigma * rng.normal(), y2 + sigma * rng.normal()});
    }
    return d;
}

MlpModel robot_arm_model(int hidden_units) {
    if (hidden_units < 1) throw ConfigError("robot_arm_model: hidden_units must be positive");
    MlpModel m;
    m.input_dim = 2;
    m.hidden_units = hidden_units;
    m.output_dim = 2;
    m.hidden_activation = Activation::tanh_fn;
    m.output_activation = Activation::linear;
    return m;
}

} // namespace sfpl
