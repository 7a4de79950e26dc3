#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "sfpl/errors.hpp"

namespace sfpl {

/// Box-bounded search domain: lower[n] <= x_n <= upper[n].
class SearchSpace {
public:
    SearchSpace(std::vector<double> lower, std::vector<double> upper)
        : lower_(std::move(lower)), upper_(std::move(upper)) {
        if (lower_.empty() || lower_.size() != upper_.size())
            throw ConfigError("SearchSpace: bound vectors must be nonempty and equal length");
        for (std::size_t n = 0; n < lower_.size(); ++n) {
            if (!std::isfinite(lower_[n]) || !std::isfinite(upper_[n]))
                throw ConfigError("SearchSpace: bounds must be finite");
            if (!(lower_[n] < upper_[n]))
                throw ConfigError("SearchSpace: lower[" + std::to_string(n) +
                                  "] must be strictly below upper[" + std::to_string(n) + "]");
        }
    }

    /// Same interval replicated over every dimension.
    static SearchSpace uniform_box(std::size_t dims, double lo, double hi) {
        return SearchSpace(std::vector<double>(dims, lo), std::vector<double>(dims, hi));
    }

    std::size_t dims() const { return lower_.size(); }
    double lower(std::size_t n) const { return lower_[n]; }
    double upper(std::size_t n) const { return upper_[n]; }
    double width(std::size_t n) const { return upper_[n] - lower_[n]; }

    bool contains(const std::vector<double>& x) const {
        if (x.size() != dims()) return false;
        for (std::size_t n = 0; n < x.size(); ++n)
            if (x[n] < lower_[n] || x[n] > upper_[n]) return false;
        return true;
    }

    std::vector<double> clamp(std::vector<double> x) const {
        for (std::size_t n = 0; n < x.size() && n < dims(); ++n) {
            if (x[n] < lower_[n]) x[n] = lower_[n];
            if (x[n] > upper_[n]) x[n] = upper_[n];
        }
        return x;
    }

private:
    std::vector<double> lower_;
    std::vector<double> upper_;
};

} // namespace sfpl
