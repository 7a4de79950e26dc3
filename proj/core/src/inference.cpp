#include "sfpl/inference.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sfpl/errors.hpp"
#include "sfpl/sampler.hpp"

namespace sfpl {

PosteriorSpec::PosteriorSpec(MlpModel m, Dataset data, SearchSpace prior_box, double d,
                             LossScale scale)
    : model(m), dataset(std::move(data)), prior(std::move(prior_box)), D(d),
      loss_scale(scale) {
    validate();
}

PosteriorSpec PosteriorSpec::from_noise(MlpModel m, Dataset data, SearchSpace prior_box,
                                        LossScale scale) {
    if (!(data.noise_sigma > 0.0))
        throw ConfigError("PosteriorSpec::from_noise: dataset has no known noise level");
    const double d = 2.0 * data.noise_sigma * data.noise_sigma;
    PosteriorSpec spec(m, std::move(data), std::move(prior_box), d, scale);
    spec.d_from_noise = true;
    return spec;
}

void PosteriorSpec::validate() const {
    if (!(D > 0.0)) throw ConfigError("PosteriorSpec: D must be positive");
    if (prior.dims() != static_cast<std::size_t>(model.param_count()))
        throw ConfigError("PosteriorSpec: prior box must have one interval per weight");
    if (d_from_noise && D != 2.0 * dataset.noise_sigma * dataset.noise_sigma)
        throw ConfigError("PosteriorSpec: D inconsistent with 2 sigma^2");
    dataset.validate();
}

SseCost PosteriorSpec::cost() const {
    const double scale =
        (loss_scale == LossScale::per_sample) ? 1.0 / static_cast<double>(dataset.size()) : 1.0;
    return SseCost(model, dataset, scale);
}

std::vector<double> mle_train(const PosteriorSpec& spec, const SfpConfig& config) {
    spec.validate();
    const SseCost cost = spec.cost();
    SfpConfig run_config = config;
    run_config.D = spec.D;
    SfpResult result = run_sfp(cost, spec.prior, run_config);
    if (!result.ok()) throw Error("mle_train: " + result.error);
    if (result.records.empty()) throw StateError("mle_train: no recorded sweeps");
    return result.records.back().argmax;
}

namespace {

PredictionSummary::Histogram freedman_diaconis(const std::vector<double>& values) {
    PredictionSummary::Histogram h;
    std::vector<double> sorted(values);
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    double lo = sorted.front();
    double hi = sorted.back();
    if (lo == hi) {
        lo -= 0.5;
        hi += 0.5;
    }
    const double q1 = sorted[static_cast<std::size_t>(0.25 * (n - 1))];
    const double q3 = sorted[static_cast<std::size_t>(0.75 * (n - 1))];
    const double iqr = q3 - q1;
    int bins = 10;
    if (iqr > 0.0) {
        const double width = 2.0 * iqr / std::cbrt(static_cast<double>(n));
        bins = std::max(10, static_cast<int>(std::ceil((hi - lo) / width)));
    }
    h.edges.resize(bins + 1);
    for (int b = 0; b <= bins; ++b) h.edges[b] = lo + (hi - lo) * b / bins;
    h.counts.assign(bins, 0);
    for (double v : values) {
        int b = static_cast<int>((v - lo) / (hi - lo) * bins);
        if (b < 0) b = 0;
        if (b >= bins) b = bins - 1;
        ++h.counts[b];
    }
    return h;
}

} // namespace

PredictionSummary bayes_predict(const PosteriorSpec& spec, const SfpConfig& config,
                                const std::vector<double>& test_input) {
    spec.validate();
    config.validate();
    const SseCost cost = spec.cost();
    SfpConfig run_config = config;
    run_config.D = spec.D;

    const auto tables = make_collocation_tables(spec.prior, run_config);
    SamplerState state = SamplerState::random_start(spec.prior, run_config.seed);

    PredictionSummary summary;
    summary.samples.assign(spec.model.output_dim, {});
    for (int m = 1; m <= run_config.sweeps; ++m) {
        sfp_sweep(state, cost, run_config, spec.prior, nullptr, tables, nullptr);
        if (m <= run_config.burn_in) continue;
        const std::vector<double> out = mlp_forward(spec.model, state.x, test_input);
        for (int k = 0; k < spec.model.output_dim; ++k) summary.samples[k].push_back(out[k]);
    }

    const std::size_t draws = summary.samples[0].size();
    summary.mean.resize(spec.model.output_dim);
    summary.std_dev.resize(spec.model.output_dim);
    for (int k = 0; k < spec.model.output_dim; ++k) {
        const auto& v = summary.samples[k];
        double mean = 0.0;
        for (double x : v) mean += x;
        mean /= static_cast<double>(draws);
        double var = 0.0;
        for (double x : v) var += (x - mean) * (x - mean);
        var = (draws > 1) ? var / static_cast<double>(draws - 1) : 0.0;
        summary.mean[k] = mean;
        summary.std_dev[k] = std::sqrt(var);
        summary.histograms.push_back(freedman_diaconis(v));
    }
    return summary;
}

std::pair<std::vector<double>, double> steepest_descent_refine(
    const CostModel& cost, const SearchSpace& space, std::vector<double> start,
    double step0, double shrink, double tol, int max_iters) {
    if (!space.contains(start))
        throw ConfigError("steepest_descent_refine: start must lie inside the bounds");
    if (!(step0 > 0.0) || !(shrink > 0.0 && shrink < 1.0) || !(tol > 0.0))
        throw ConfigError("steepest_descent_refine: invalid step parameters");

    std::vector<double> x = std::move(start);
    double fx = cost.value(x);
    double step = step0;
    std::vector<double> g(x.size()), trial(x.size());
    for (int it = 0; it < max_iters && step >= tol; ++it) {
        double norm = 0.0;
        for (std::size_t n = 0; n < x.size(); ++n) {
            g[n] = cost.partial(x, n);
            if (!std::isfinite(g[n]))
                throw SingularCostError("steepest_descent_refine: non-finite gradient at coordinate " +
                                        std::to_string(n));
            norm += g[n] * g[n];
        }
        norm = std::sqrt(norm);
        if (norm == 0.0) break;
        for (std::size_t n = 0; n < x.size(); ++n) trial[n] = x[n] - step * g[n] / norm;
        trial = space.clamp(std::move(trial));
        const double ft = cost.value(trial);
        if (ft < fx) {
            x = trial;
            fx = ft;
        } else {
            step *= shrink;
        }
    }
    return {x, fx};
}

std::vector<double> evidence_sharpening_experiment(
    const MlpModel& model, const std::vector<Dataset>& nested_datasets,
    const PosteriorSpec& spec_template, const SfpConfig& config, std::size_t weight_index) {
    if (nested_datasets.empty())
        throw ConfigError("evidence_sharpening_experiment: no datasets given");
    if (weight_index >= static_cast<std::size_t>(model.param_count()))
        throw ConfigError("evidence_sharpening_experiment: weight index out of range");
    for (std::size_t i = 1; i < nested_datasets.size(); ++i) {
        const Dataset& small = nested_datasets[i - 1];
        const Dataset& big = nested_datasets[i];
        if (small.size() >= big.size())
            throw ConfigError("evidence_sharpening_experiment: dataset sizes must increase");
        for (std::size_t s = 0; s < small.size(); ++s)
            if (small.inputs[s] != big.inputs[s] || small.targets[s] != big.targets[s])
                throw ConfigError("evidence_sharpening_experiment: datasets are not nested by inclusion");
    }

    std::vector<double> peaks;
    peaks.reserve(nested_datasets.size());
    for (const Dataset& data : nested_datasets) {
        SfpConfig run_config = config;
        run_config.D = spec_template.D;
        SfpResult result = [&] {
            if (data.size() == 0) {
                FunctionCost flat(spec_template.prior.dims(),
                                  [](const std::vector<double>&) { return 0.0; },
                                  [](const std::vector<double>&, std::size_t) { return 0.0; });
                return run_sfp(flat, spec_template.prior, run_config);
            }
            PosteriorSpec spec(model, data, spec_template.prior, spec_template.D,
                               spec_template.loss_scale);
            return run_sfp(spec.cost(), spec.prior, run_config);
        }();
        if (!result.ok()) throw Error("evidence_sharpening_experiment: " + result.error);

        const CdfExpansion marginal = result.acc.marginal(weight_index);
        const SineBasis& basis = marginal.basis();
        const CollocationTables tables(basis, config.table_resolution);
        const double xmax = marginal_argmax(result.acc, weight_index, tables);
        peaks.push_back(marginal.pdf(xmax));
    }
    return peaks;
}

} // namespace sfpl
