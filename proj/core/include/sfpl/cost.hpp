#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "sfpl/search_space.hpp"

namespace sfpl {

/// A cost function V(x) with per-coordinate analytic partial derivatives.
/// Implementations must be reentrant and free of side effects: several
/// trajectories may evaluate the same model concurrently.
class CostModel {
public:
    virtual ~CostModel() = default;

    virtual std::size_t dim() const = 0;
    virtual double value(const std::vector<double>& x) const = 0;

    /// dV/dx_n at x.
    virtual double partial(const std::vector<double>& x, std::size_t n) const = 0;
};

/// Adapter wrapping plain callables as a CostModel.
class FunctionCost : public CostModel {
public:
    using ValueFn = std::function<double(const std::vector<double>&)>;
    using PartialFn = std::function<double(const std::vector<double>&, std::size_t)>;

    FunctionCost(std::size_t dim, ValueFn value, PartialFn partial)
        : dim_(dim), value_(std::move(value)), partial_(std::move(partial)) {}

    std::size_t dim() const override { return dim_; }
    double value(const std::vector<double>& x) const override { return value_(x); }
    double partial(const std::vector<double>& x, std::size_t n) const override {
        return partial_(x, n);
    }

private:
    std::size_t dim_;
    ValueFn value_;
    PartialFn partial_;
};

/// Checks analytic partials against central finite differences at
/// `points` random interior points (step 1e-6 of the interval width,
/// relative tolerance 1e-5). Returns the worst relative error seen.
double check_partial_consistency(const CostModel& cost, const SearchSpace& space,
                                 int points, std::uint64_t seed,
                                 double rel_tol = 1e-5);

} // namespace sfpl
