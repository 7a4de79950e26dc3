#include "sfpl/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "sfpl/diagnostics.hpp"
#include "sfpl/errors.hpp"

namespace sfpl {

namespace {

/// Clamp to [0,1] and enforce monotonicity by running maximum.
void monotonize(std::vector<double>& y) {
    double run = 0.0;
    for (double& v : y) {
        if (v < 0.0) v = 0.0;
        if (v > 1.0) v = 1.0;
        if (v < run) v = run;
        run = v;
    }
}

/// Piecewise-linear inverse of a monotone table at u.
double invert_table(const std::vector<double>& grid, const std::vector<double>& y, double u) {
    const std::size_t t = y.size() - 1;
    if (u <= y.front()) return grid.front();
    if (u >= y.back()) return grid.back();
    auto it = std::lower_bound(y.begin(), y.end(), u);
    std::size_t i = static_cast<std::size_t>(it - y.begin());
    if (i == 0) return grid.front();
    if (i > t) return grid.back();
    const double dy = y[i] - y[i - 1];
    if (dy <= 0.0) return grid[i - 1];
    const double frac = (u - y[i - 1]) / dy;
    return grid[i - 1] + frac * (grid[i] - grid[i - 1]);
}

double golden_max(const std::function<double(double)>& f, double a, double b, double tol) {
    const double inv_phi = 0.6180339887498948482;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

/// Draw from a solved coefficient vector using precomputed tables.
double invert_with_tables(const CollocationTables& tables, const std::vector<double>& coeffs,
                          double u) {
    const Matrix& phi = tables.inversion_rows();
    std::vector<double> y(phi.rows());
    for (std::size_t i = 0; i < phi.rows(); ++i) {
        const double* r = phi.row(i);
        double acc = 0.0;
        for (std::size_t j = 0; j < phi.cols(); ++j) acc += r[j] * coeffs[j];
        y[i] = acc;
    }
    monotonize(y);
    return invert_table(tables.inversion_grid(), y, u);
}

[[noreturn]] void rethrow_annotated(const Error& e, long sweep, std::size_t coord) {
    const std::string msg = "sweep " + std::to_string(sweep) + ", coordinate " +
                            std::to_string(coord) + ": " + e.what();
    if (dynamic_cast<const SingularSystemError*>(&e)) throw SingularSystemError(msg);
    if (dynamic_cast<const SingularCostError*>(&e)) throw SingularCostError(msg);
    throw Error(msg);
}

} // namespace

double invert_cdf(const CdfExpansion& expansion, double u, int table_resolution) {
    if (!(u >= 0.0 && u <= 1.0))
        throw DomainError("invert_cdf: u must lie in [0, 1]");
    if (table_resolution < 64)
        throw ConfigError("invert_cdf: table resolution must be at least 64");
    const int t = table_resolution;
    const double lo = expansion.lower();
    const double w = expansion.upper() - expansion.lower();
    std::vector<double> grid(t + 1), y(t + 1);
    for (int i = 0; i <= t; ++i) {
        grid[i] = lo + w * i / t;
        y[i] = expansion.cdf(grid[i]);
    }
    monotonize(y);
    return invert_table(grid, y, u);
}

std::vector<std::shared_ptr<const CollocationTables>> make_collocation_tables(
    const SearchSpace& space, const SfpConfig& config) {
    std::map<std::pair<double, double>, std::shared_ptr<const CollocationTables>> pool;
    std::vector<std::shared_ptr<const CollocationTables>> tables(space.dims());
    for (std::size_t n = 0; n < space.dims(); ++n) {
        const auto key = std::make_pair(space.lower(n), space.upper(n));
        auto it = pool.find(key);
        if (it == pool.end()) {
            auto t = std::make_shared<const CollocationTables>(
                SineBasis(config.L, key.first, key.second), config.table_resolution);
            it = pool.emplace(key, std::move(t)).first;
        }
        tables[n] = it->second;
    }
    return tables;
}

void sfp_sweep(SamplerState& state, const CostModel& cost, const SfpConfig& config,
               const SearchSpace& space, MarginalAccumulator* acc,
               const std::vector<std::shared_ptr<const CollocationTables>>& tables,
               SweepStats* stats) {
    const std::size_t dims = space.dims();
    std::vector<std::size_t> order(dims);
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (config.sweep_order == SweepOrder::shuffled_per_sweep) state.rng.shuffle(order);

    std::vector<double> g;
    for (std::size_t idx = 0; idx < dims; ++idx) {
        const std::size_t n = order[idx];
        try {
            gradient_slice(cost, state, n, *tables[n], g);
            if (stats) stats->gradient_evals += static_cast<long>(g.size());
            std::vector<double> coeffs = solve_with_tables(*tables[n], g, config.D);
            if (acc) acc->add(n, coeffs);
            state.x[n] = invert_with_tables(*tables[n], coeffs, state.rng.uniform());
        } catch (const Error& e) {
            rethrow_annotated(e, state.sweep_index + 1, n);
        }
    }
    ++state.sweep_index;
}

void sfp_sweep(SamplerState& state, const CostModel& cost, const SfpConfig& config,
               const SearchSpace& space, MarginalAccumulator& acc, SweepStats* stats) {
    const auto tables = make_collocation_tables(space, config);
    sfp_sweep(state, cost, config, space, &acc, tables, stats);
}

double marginal_argmax(const MarginalAccumulator& acc, std::size_t n,
                       const CollocationTables& tables) {
    const std::vector<double> mc = acc.mean_coeffs(n);
    const Matrix& rows = tables.argmax_rows();
    const auto& grid = tables.argmax_grid();
    std::size_t best = 0;
    double best_val = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        const double* r = rows.row(i);
        double acc_val = 0.0;
        for (std::size_t j = 0; j < rows.cols(); ++j) acc_val += r[j] * mc[j];
        if (acc_val > best_val) {
            best_val = acc_val;
            best = i;
        }
    }
    const SineBasis& basis = tables.basis();
    auto density = [&](double x) {
        double v = 0.0;
        for (int j = 0; j < basis.terms(); ++j) v += mc[j] * basis.dphi(j, x);
        return v;
    };
    const double a = grid[best == 0 ? 0 : best - 1];
    const double b = grid[std::min(grid.size() - 1, best + 1)];
    return golden_max(density, a, b, 1e-8);
}

SfpResult run_sfp(const CostModel& cost, const SearchSpace& space, const SfpConfig& config,
                  const SweepObserver& on_sweep) {
    config.validate();
    if (cost.dim() != space.dims())
        throw ConfigError("run_sfp: cost dimension does not match the search space");

    const auto tables = make_collocation_tables(space, config);
    SamplerState state = SamplerState::random_start(space, config.seed);
    SfpResult result{MarginalAccumulator(space, config.L)};
    SweepStats stats;

    for (int m = 1; m <= config.sweeps; ++m) {
        MarginalAccumulator* acc = (m > config.burn_in) ? &result.acc : nullptr;
        try {
            sfp_sweep(state, cost, config, space, acc, tables, &stats);
        } catch (const Error& e) {
            result.error = e.what();
            break;
        }
        if (acc) {
            SweepRecord rec;
            rec.sweep = m;
            const auto [av, s] = convergence_measures(result.acc);
            rec.av = av;
            rec.s = s;
            rec.argmax.resize(space.dims());
            for (std::size_t n = 0; n < space.dims(); ++n)
                rec.argmax[n] = marginal_argmax(result.acc, n, *tables[n]);
            rec.cost_at_argmax = cost.value(rec.argmax);
            result.records.push_back(std::move(rec));
        }
        result.completed_sweeps = m;
        if (on_sweep) on_sweep(state, result.acc);
    }

    result.gradient_evals = stats.gradient_evals;
    result.final_state = state.x;
    return result;
}

} // namespace sfpl
