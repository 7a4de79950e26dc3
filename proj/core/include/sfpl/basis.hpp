#pragma once

#include <cstddef>

#include "sfpl/errors.hpp"

namespace sfpl {

/// Quarter-wave sine basis on [lower, upper]:
///
///   phi_j(x) = sin(omega_j (x - lower)),  omega_j = (2j+1) pi / (2 (upper - lower))
///
/// for j = 0..L-1. Every phi_j vanishes at the lower bound and has zero
/// slope at the upper bound, where it takes the value (-1)^j.
class SineBasis {
public:
    SineBasis(int terms, double lower, double upper)
        : terms_(terms), lower_(lower), upper_(upper) {
        if (terms < 2) throw ConfigError("SineBasis: at least 2 terms required");
        if (!(lower < upper)) throw ConfigError("SineBasis: lower must be below upper");
    }

    int terms() const { return terms_; }
    double lower() const { return lower_; }
    double upper() const { return upper_; }
    double width() const { return upper_ - lower_; }

    double omega(int j) const;
    double phi(int j, double x) const;
    double dphi(int j, double x) const;
    double ddphi(int j, double x) const;

    /// phi_j evaluated at the upper bound: alternating +1/-1.
    double boundary_value(int j) const { return (j % 2 == 0) ? 1.0 : -1.0; }

    /// Closed-form integral of phi_j over the whole interval.
    double integral(int j) const;

    /// Closed-form integral of x * phi_j(x) over the whole interval.
    double integral_x(int j) const;

private:
    int terms_;
    double lower_;
    double upper_;
};

} // namespace sfpl
