#include "sfpl/expansion.hpp"

#include <cmath>
#include <string>

#include "sfpl/errors.hpp"

namespace sfpl {

CdfExpansion::CdfExpansion(SineBasis basis, std::vector<double> coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<std::size_t>(basis_.terms()))
        throw ConfigError("CdfExpansion: coefficient count must equal basis size");
}

void CdfExpansion::check_domain(double x) const {
    if (x < lower() || x > upper() || !std::isfinite(x))
        throw DomainError("CdfExpansion: x = " + std::to_string(x) + " outside [" +
                          std::to_string(lower()) + ", " + std::to_string(upper()) + "]");
}

double CdfExpansion::cdf(double x) const {
    check_domain(x);
    double acc = 0.0;
    for (int j = 0; j < basis_.terms(); ++j) acc += coeffs_[j] * basis_.phi(j, x);
    return acc;
}

double CdfExpansion::pdf(double x) const {
    check_domain(x);
    double acc = 0.0;
    for (int j = 0; j < basis_.terms(); ++j) acc += coeffs_[j] * basis_.dphi(j, x);
    return acc;
}

double CdfExpansion::mean() const {
    double acc = 0.0;
    for (int j = 0; j < basis_.terms(); ++j) acc += coeffs_[j] * basis_.integral(j);
    return basis_.upper() - acc;
}

double CdfExpansion::second_moment() const {
    double acc = 0.0;
    for (int j = 0; j < basis_.terms(); ++j) acc += coeffs_[j] * basis_.integral_x(j);
    return basis_.upper() * basis_.upper() - 2.0 * acc;
}

double CdfExpansion::std_dev() const {
    const double m = mean();
    return std::sqrt(std::max(0.0, second_moment() - m * m));
}

} // namespace sfpl
