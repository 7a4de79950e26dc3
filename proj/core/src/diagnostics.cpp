#include "sfpl/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sfpl/errors.hpp"

namespace sfpl {

std::pair<double, double> convergence_measures(const MarginalAccumulator& acc) {
    const std::size_t dims = acc.dims();
    double av = 0.0;
    double s = 0.0;
    for (std::size_t n = 0; n < dims; ++n) {
        const auto [m, sd] = marginal_moments(acc, n);
        av += m;
        s += sd;
    }
    return {av / static_cast<double>(dims), s / static_cast<double>(dims)};
}

std::vector<double> trajectory_distance(const std::vector<double>& s1,
                                        const std::vector<double>& s2) {
    if (s1.size() != s2.size())
        throw ConfigError("trajectory_distance: series lengths differ");
    std::vector<double> d(s1.size());
    for (std::size_t i = 0; i < s1.size(); ++i) d[i] = std::fabs(s1[i] - s2[i]);
    return d;
}

namespace {

/// OLS slope of ys vs xs.
double ols_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const double n = static_cast<double>(xs.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace

double fit_power_law(const std::vector<double>& distance, int tail_start, int* dropped_zeros) {
    if (tail_start < 1)
        throw ConfigError("fit_power_law: tail_start must be at least 1");
    std::vector<double> lx, ly;
    int dropped = 0;
    for (std::size_t i = 0; i < distance.size(); ++i) {
        const int sweep = static_cast<int>(i) + 1;
        if (sweep < tail_start) continue;
        if (distance[i] <= 0.0) {
            ++dropped;
            continue;
        }
        lx.push_back(std::log(static_cast<double>(sweep)));
        ly.push_back(std::log(distance[i]));
    }
    if (dropped_zeros) *dropped_zeros = dropped;
    if (lx.size() < 10)
        throw InsufficientDataError("fit_power_law: only " + std::to_string(lx.size()) +
                                    " positive tail points; at least 10 required");
    return ols_slope(lx, ly);
}

double fit_geometric_rate(const std::vector<double>& distance, int window_end,
                          int* dropped_zeros) {
    std::vector<double> xs, ly;
    int dropped = 0;
    for (std::size_t i = 0; i < distance.size(); ++i) {
        const int sweep = static_cast<int>(i) + 1;
        if (sweep > window_end) break;
        if (distance[i] <= 0.0) {
            ++dropped;
            continue;
        }
        xs.push_back(static_cast<double>(sweep));
        ly.push_back(std::log(distance[i]));
    }
    if (dropped_zeros) *dropped_zeros = dropped;
    if (xs.size() < 10)
        throw InsufficientDataError("fit_geometric_rate: only " + std::to_string(xs.size()) +
                                    " positive points in the window; at least 10 required");
    return ols_slope(xs, ly);
}

double BoltzmannTable::cdf_at(double xq) const {
    if (xq <= x.front()) return cdf.front();
    if (xq >= x.back()) return cdf.back();
    auto it = std::upper_bound(x.begin(), x.end(), xq);
    const std::size_t i = static_cast<std::size_t>(it - x.begin());
    const double frac = (xq - x[i - 1]) / (x[i] - x[i - 1]);
    return cdf[i - 1] + frac * (cdf[i] - cdf[i - 1]);
}

BoltzmannTable boltzmann_oracle_1d(const std::function<double(double)>& potential,
                                   double D, double lower, double upper, int grid_points) {
    if (grid_points < 1000)
        throw ConfigError("boltzmann_oracle_1d: at least 1000 grid points required");
    if (!(D > 0.0) || !(lower < upper))
        throw ConfigError("boltzmann_oracle_1d: invalid parameters");

    const int q = grid_points;
    BoltzmannTable table;
    table.x.resize(q + 1);
    table.pdf.resize(q + 1);
    table.cdf.resize(q + 1);

    const double h = (upper - lower) / q;
    double vmin = 0.0;
    bool first = true;
    std::vector<double> v(q + 1);
    for (int i = 0; i <= q; ++i) {
        table.x[i] = lower + h * i;
        v[i] = potential(table.x[i]);
        if (!std::isfinite(v[i]))
            throw SingularCostError("boltzmann_oracle_1d: non-finite potential at x = " +
                                    std::to_string(table.x[i]));
        if (first || v[i] < vmin) {
            vmin = v[i];
            first = false;
        }
    }
    // shift by the minimum before exponentiating to avoid under/overflow
    for (int i = 0; i <= q; ++i) table.pdf[i] = std::exp(-(v[i] - vmin) / D);

    table.cdf[0] = 0.0;
    for (int i = 1; i <= q; ++i)
        table.cdf[i] = table.cdf[i - 1] + 0.5 * h * (table.pdf[i - 1] + table.pdf[i]);
    const double z = table.cdf[q];
    for (int i = 0; i <= q; ++i) {
        table.cdf[i] /= z;
        table.pdf[i] /= z;
    }

    double m1 = 0.0, m2 = 0.0;
    for (int i = 0; i < q; ++i) {
        const double xa = table.x[i], xb = table.x[i + 1];
        const double pa = table.pdf[i], pb = table.pdf[i + 1];
        m1 += 0.5 * h * (xa * pa + xb * pb);
        m2 += 0.5 * h * (xa * xa * pa + xb * xb * pb);
    }
    table.mean = m1;
    table.std_dev = std::sqrt(std::max(0.0, m2 - m1 * m1));
    return table;
}

} // namespace sfpl
