#include "sfpl/accumulator.hpp"

#include <string>

#include "sfpl/errors.hpp"

namespace sfpl {

MarginalAccumulator::MarginalAccumulator(const SearchSpace& space, int basis_terms)
    : terms_(basis_terms) {
    bases_.reserve(space.dims());
    for (std::size_t n = 0; n < space.dims(); ++n)
        bases_.emplace_back(basis_terms, space.lower(n), space.upper(n));
    sums_.assign(space.dims(), std::vector<double>(basis_terms, 0.0));
    counts_.assign(space.dims(), 0);
}

void MarginalAccumulator::add(std::size_t n, const std::vector<double>& coeffs) {
    if (n >= dims()) throw ConfigError("MarginalAccumulator: dimension index out of range");
    if (coeffs.size() != static_cast<std::size_t>(terms_))
        throw ConfigError("MarginalAccumulator: coefficient size mismatch");
    auto& s = sums_[n];
    for (int j = 0; j < terms_; ++j) s[j] += coeffs[j];
    ++counts_[n];
}

std::vector<double> MarginalAccumulator::mean_coeffs(std::size_t n) const {
    if (n >= dims()) throw ConfigError("MarginalAccumulator: dimension index out of range");
    if (counts_[n] == 0)
        throw StateError("MarginalAccumulator: dimension " + std::to_string(n) +
                         " has no accumulated expansions");
    std::vector<double> m(sums_[n]);
    const double inv = 1.0 / static_cast<double>(counts_[n]);
    for (double& v : m) v *= inv;
    return m;
}

CdfExpansion MarginalAccumulator::marginal(std::size_t n) const {
    return CdfExpansion(bases_[n], mean_coeffs(n));
}

std::pair<double, double> marginal_moments(const MarginalAccumulator& acc, std::size_t n) {
    const CdfExpansion m = acc.marginal(n);
    return {m.mean(), m.std_dev()};
}

} // namespace sfpl
