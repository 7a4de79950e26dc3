#include "sfpl/problems/michalewicz.hpp"

#include <cmath>

#include "sfpl/errors.hpp"

namespace sfpl {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;

double int_pow(double base, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}
} // namespace

double michalewicz_value(double x1, double x2, int m) {
    if (m < 1) throw ConfigError("michalewicz_value: m must be at least 1");
    const double s1 = std::sin(x1 * x1 / kPi);
    const double s2 = std::sin(2.0 * x2 * x2 / kPi);
    return -std::sin(x1) * int_pow(s1, 2 * m) - std::sin(x2) * int_pow(s2, 2 * m);
}

double michalewicz_partial(const std::vector<double>& x, std::size_t n, int m) {
    if (m < 1) throw ConfigError("michalewicz_partial: m must be at least 1");
    if (n > 1) throw ConfigError("michalewicz_partial: coordinate index must be 0 or 1");
    if (n == 0) {
        const double x1 = x[0];
        const double arg = x1 * x1 / kPi;
        const double s = std::sin(arg);
        return -std::cos(x1) * int_pow(s, 2 * m) -
               std::sin(x1) * (2.0 * m) * int_pow(s, 2 * m - 1) * std::cos(arg) * (2.0 * x1 / kPi);
    }
    const double x2 = x[1];
    const double arg = 2.0 * x2 * x2 / kPi;
    const double s = std::sin(arg);
    return -std::cos(x2) * int_pow(s, 2 * m) -
           std::sin(x2) * (2.0 * m) * int_pow(s, 2 * m - 1) * std::cos(arg) * (4.0 * x2 / kPi);
}

MichalewiczCost::MichalewiczCost(int m) : m_(m) {
    if (m < 1) throw ConfigError("MichalewiczCost: m must be at least 1");
}

double MichalewiczCost::value(const std::vector<double>& x) const {
    return michalewicz_value(x[0], x[1], m_);
}

double MichalewiczCost::partial(const std::vector<double>& x, std::size_t n) const {
    return michalewicz_partial(x, n, m_);
}

SearchSpace michalewicz_space() {
    return SearchSpace::uniform_box(2, 0.0, kPi);
}

} // namespace sfpl
