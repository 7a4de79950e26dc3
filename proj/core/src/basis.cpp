#include "sfpl/basis.hpp"

#include <cmath>

namespace sfpl {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

double SineBasis::omega(int j) const {
    return (2.0 * j + 1.0) * kPi / (2.0 * width());
}

double SineBasis::phi(int j, double x) const {
    return std::sin(omega(j) * (x - lower_));
}

double SineBasis::dphi(int j, double x) const {
    const double w = omega(j);
    return w * std::cos(w * (x - lower_));
}

double SineBasis::ddphi(int j, double x) const {
    const double w = omega(j);
    return -w * w * std::sin(w * (x - lower_));
}

double SineBasis::integral(int j) const {
    return 1.0 / omega(j);
}

double SineBasis::integral_x(int j) const {
    const double w = omega(j);
    return lower_ / w + boundary_value(j) / (w * w);
}

} // namespace sfpl
