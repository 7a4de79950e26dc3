#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sfpl/expansion.hpp"
#include "sfpl/search_space.hpp"

namespace sfpl {

/// Per-dimension running mean of conditional-CDF coefficient vectors:
/// the learned marginal estimate. Sums and counts are kept so the mean
/// is exact at every stage.
class MarginalAccumulator {
public:
    MarginalAccumulator(const SearchSpace& space, int basis_terms);

    std::size_t dims() const { return bases_.size(); }
    int basis_terms() const { return terms_; }
    long update_count(std::size_t n) const { return counts_[n]; }

    /// Adds one solved coefficient vector for dimension n.
    void add(std::size_t n, const std::vector<double>& coeffs);

    /// Arithmetic mean of everything accumulated for dimension n.
    std::vector<double> mean_coeffs(std::size_t n) const;

    /// The averaged marginal CDF of dimension n as an expansion.
    CdfExpansion marginal(std::size_t n) const;

    const SineBasis& basis(std::size_t n) const { return bases_[n]; }

private:
    int terms_;
    std::vector<SineBasis> bases_;
    std::vector<std::vector<double>> sums_;
    std::vector<long> counts_;
};

/// Analytic (mean, std) of the averaged marginal of dimension n.
std::pair<double, double> marginal_moments(const MarginalAccumulator& acc, std::size_t n);

} // namespace sfpl
