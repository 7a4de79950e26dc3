#pragma once

#include <cstdint>
#include <utility>

#include "sfpl/problems/dataset.hpp"
#include "sfpl/problems/mlp.hpp"

namespace sfpl {

/// Noiseless two-joint arm end position:
///   y1 = 2 cos(x1) + 1.3 cos(x1 + x2)
///   y2 = 2 sin(x1) + 1.3 sin(x1 + x2)
std::pair<double, double> robot_arm_truth(double x1, double x2);

/// Samples the arm kinematics with additive Gaussian noise of standard
/// deviation `sigma` on each output. Inputs are uniform on
/// x1 in [-1.932, -0.453] union [0.453, 1.932] (equal mass on the two
/// halves) and x2 in [0.534, 3.142]. Deterministic per seed.
Dataset robot_arm_generate(int n_samples, std::uint64_t seed, double sigma = 0.1);

/// 2-hidden-output regression architecture used for the arm: tanh
/// hidden units, linear outputs.
MlpModel robot_arm_model(int hidden_units = 16);

} // namespace sfpl
