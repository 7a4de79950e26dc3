#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "sfpl/accumulator.hpp"

namespace sfpl {

/// Averaged convergence measures over all dimensions: av is the mean of
/// the marginal means, s the mean of the marginal standard deviations.
std::pair<double, double> convergence_measures(const MarginalAccumulator& acc);

/// Elementwise |s1 - s2|; series must have equal length.
std::vector<double> trajectory_distance(const std::vector<double>& s1,
                                        const std::vector<double>& s2);

/// OLS slope of log(distance) vs log(sweep) over the tail starting at
/// sweep index `tail_start` (1-based sweeps; entry i of the series is
/// sweep i+1). Zeros are dropped before the fit; their count is
/// reported through dropped_zeros when non-null. Fewer than 10 positive
/// tail points is an error.
double fit_power_law(const std::vector<double>& distance, int tail_start,
                     int* dropped_zeros = nullptr);

/// Log-linear decay rate over sweeps [1, window_end]: OLS slope of
/// log(distance) vs sweep index. Same zero-dropping policy.
double fit_geometric_rate(const std::vector<double>& distance, int window_end = 100,
                          int* dropped_zeros = nullptr);

/// Quadrature reference for 1-D stationary densities: trapezoid
/// integration of exp(-V/D) on a uniform grid of Q+1 points.
struct BoltzmannTable {
    std::vector<double> x;
    std::vector<double> cdf;
    std::vector<double> pdf;
    double mean = 0.0;
    double std_dev = 0.0;

    /// Linear interpolation of the CDF table.
    double cdf_at(double xq) const;
};

BoltzmannTable boltzmann_oracle_1d(const std::function<double(double)>& potential,
                                   double D, double lower, double upper, int grid_points);

} // namespace sfpl
