#pragma once

#include <utility>
#include <vector>

#include "sfpl/basis.hpp"

namespace sfpl {

/// One conditional CDF y(x) = sum_j a_j phi_j(x) in the sine basis.
/// y(lower) is structurally 0; the solver enforces y(upper) = 1.
class CdfExpansion {
public:
    CdfExpansion(SineBasis basis, std::vector<double> coeffs);

    const SineBasis& basis() const { return basis_; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    double lower() const { return basis_.lower(); }
    double upper() const { return basis_.upper(); }

    /// CDF value; throws DomainError outside [lower, upper].
    double cdf(double x) const;

    /// Density value (the CDF derivative). Truncation may make it
    /// slightly negative; it is never clamped here.
    double pdf(double x) const;

    /// Analytic first moment of the density: E[x] = upper - sum_j a_j int(phi_j).
    double mean() const;

    /// Analytic second moment: E[x^2] = upper^2 - 2 sum_j a_j int(x phi_j).
    double second_moment() const;

    /// sqrt(max(0, E[x^2] - E[x]^2)).
    double std_dev() const;

private:
    void check_domain(double x) const;

    SineBasis basis_;
    std::vector<double> coeffs_;
};

inline double eval_cdf(const CdfExpansion& e, double x) { return e.cdf(x); }
inline double eval_pdf(const CdfExpansion& e, double x) { return e.pdf(x); }

} // namespace sfpl
