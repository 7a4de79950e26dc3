#pragma once

#include <cstddef>
#include <vector>

#include "sfpl/cost.hpp"
#include "sfpl/search_space.hpp"

namespace sfpl {

/// Two-dimensional Michalewicz-type test cost on [0, pi]^2:
///
///   V(x1, x2) = -sin(x1) sin(x1^2/pi)^(2m) - sin(x2) sin(2 x2^2/pi)^(2m)
///
/// The second term's sin(2 x2^2/pi) argument is kept exactly as used by
/// the benchmark variant this library reproduces.
double michalewicz_value(double x1, double x2, int m);

/// Analytic partial derivative with respect to coordinate n (0 or 1).
double michalewicz_partial(const std::vector<double>& x, std::size_t n, int m);

class MichalewiczCost : public CostModel {
public:
    explicit MichalewiczCost(int m);

    std::size_t dim() const override { return 2; }
    double value(const std::vector<double>& x) const override;
    double partial(const std::vector<double>& x, std::size_t n) const override;
    int steepness() const { return m_; }

private:
    int m_;
};

/// The benchmark search box [0, pi]^2.
SearchSpace michalewicz_space();

} // namespace sfpl
