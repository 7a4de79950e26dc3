#include "sfpl/cost.hpp"

#include <cmath>
#include <string>

#include "sfpl/errors.hpp"
#include "sfpl/rng.hpp"

namespace sfpl {

double check_partial_consistency(const CostModel& cost, const SearchSpace& space,
                                 int points, std::uint64_t seed, double rel_tol) {
    if (cost.dim() != space.dims())
        throw ConfigError("check_partial_consistency: dimension mismatch");
    Rng rng(seed);
    double worst = 0.0;
    std::vector<double> x(cost.dim());
    for (int p = 0; p < points; ++p) {
        for (std::size_t n = 0; n < x.size(); ++n) {
            // keep a small margin so the FD stencil stays interior
            x[n] = space.lower(n) + space.width(n) * (0.01 + 0.98 * rng.uniform());
        }
        for (std::size_t n = 0; n < x.size(); ++n) {
            const double h = 1e-6 * space.width(n);
            std::vector<double> xp = x, xm = x;
            xp[n] += h;
            xm[n] -= h;
            const double fd = (cost.value(xp) - cost.value(xm)) / (2.0 * h);
            const double an = cost.partial(x, n);
            if (!std::isfinite(fd) || !std::isfinite(an))
                throw SingularCostError("check_partial_consistency: non-finite value at coordinate " +
                                        std::to_string(n));
            const double scale = std::max({std::fabs(fd), std::fabs(an), 1e-8});
            worst = std::max(worst, std::fabs(fd - an) / scale);
        }
    }
    if (worst > rel_tol)
        throw ConfigError("check_partial_consistency: analytic partial deviates from finite differences by relative " +
                          std::to_string(worst));
    return worst;
}

} // namespace sfpl
