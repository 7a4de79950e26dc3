#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "sfpl/accumulator.hpp"
#include "sfpl/collocation.hpp"
#include "sfpl/config.hpp"
#include "sfpl/cost.hpp"
#include "sfpl/expansion.hpp"
#include "sfpl/search_space.hpp"
#include "sfpl/state.hpp"

namespace sfpl {

/// Inverse-transform draw from an expansion CDF: builds a T+1-point
/// lookup table, clamps it to [0,1], monotonizes it by running maximum
/// and evaluates the piecewise-linear inverse at u.
double invert_cdf(const CdfExpansion& expansion, double u, int table_resolution);

struct SweepStats {
    long gradient_evals = 0; ///< cost partial() calls made by the sampler
};

/// One full Gibbs-style sweep: for every coordinate in the configured
/// order, solve the conditional CDF, accumulate its coefficients and
/// redraw that coordinate by inversion. Errors are annotated with the
/// sweep and coordinate where they occurred. Pass acc = nullptr to
/// sample without accumulating (burn-in).
void sfp_sweep(SamplerState& state, const CostModel& cost, const SfpConfig& config,
               const SearchSpace& space, MarginalAccumulator* acc,
               const std::vector<std::shared_ptr<const CollocationTables>>& tables,
               SweepStats* stats = nullptr);

/// Convenience overload that builds its own tables.
void sfp_sweep(SamplerState& state, const CostModel& cost, const SfpConfig& config,
               const SearchSpace& space, MarginalAccumulator& acc,
               SweepStats* stats = nullptr);

/// Shared basis tables per dimension; dimensions with identical bounds
/// share one table instance.
std::vector<std::shared_ptr<const CollocationTables>> make_collocation_tables(
    const SearchSpace& space, const SfpConfig& config);

/// Diagnostics snapshot taken after each accumulated sweep.
struct SweepRecord {
    int sweep = 0;                ///< 1-based sweep index
    double av = 0.0;              ///< mean over dims of marginal means
    double s = 0.0;               ///< mean over dims of marginal stds
    std::vector<double> argmax;   ///< per-dimension marginal density argmax
    double cost_at_argmax = 0.0;
};

struct SfpResult {
    explicit SfpResult(MarginalAccumulator a) : acc(std::move(a)) {}

    MarginalAccumulator acc;
    std::vector<SweepRecord> records;
    std::vector<double> final_state;
    long gradient_evals = 0;
    int completed_sweeps = 0;
    std::string error; ///< empty on success; annotated failure otherwise

    bool ok() const { return error.empty(); }
};

/// Called after every sweep with the post-sweep state and accumulator.
using SweepObserver = std::function<void(const SamplerState&, const MarginalAccumulator&)>;

/// Full SFPL run: uniform random start, `sweeps` coordinate sweeps,
/// per-sweep diagnostics (averaged moments, marginal argmax by dense
/// grid scan plus golden-section refinement, cost at the argmax). On a
/// solver failure the partial result carries the annotated error.
SfpResult run_sfp(const CostModel& cost, const SearchSpace& space, const SfpConfig& config,
                  const SweepObserver& on_sweep = {});

/// Argmax of the averaged marginal density of dimension n: dense scan
/// over the tables' argmax grid, then golden-section to 1e-8 width.
double marginal_argmax(const MarginalAccumulator& acc, std::size_t n,
                       const CollocationTables& tables);

} // namespace sfpl
