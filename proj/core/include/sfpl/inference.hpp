#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sfpl/config.hpp"
#include "sfpl/cost.hpp"
#include "sfpl/problems/mlp.hpp"
#include "sfpl/search_space.hpp"

namespace sfpl {

/// How the dataset loss enters the sampled energy V.
enum class LossScale {
    total,     ///< V = sum of squared errors over the whole dataset
    per_sample ///< V = mean squared error per sample
};

/// Posterior over MLP weights: p(w | S) proportional to exp(-V(w)/D)
/// restricted to a uniform prior box.
struct PosteriorSpec {
    MlpModel model;
    Dataset dataset;
    SearchSpace prior;
    double D = 1.0;
    LossScale loss_scale = LossScale::total;
    bool d_from_noise = false; ///< true when D was derived as 2 sigma^2

    PosteriorSpec(MlpModel m, Dataset data, SearchSpace prior_box, double d,
                  LossScale scale = LossScale::total);

    /// D fixed by the known observation noise: D = 2 sigma^2.
    static PosteriorSpec from_noise(MlpModel m, Dataset data, SearchSpace prior_box,
                                    LossScale scale = LossScale::total);

    void validate() const;

    /// The energy as a CostModel (scaled per loss_scale).
    SseCost cost() const;
};

/// Ensemble prediction: per-output samples, their moments and histograms.
struct PredictionSummary {
    struct Histogram {
        std::vector<double> edges;  ///< bin edges, size counts.size() + 1
        std::vector<long> counts;
    };

    std::vector<std::vector<double>> samples; ///< [output][draw]
    std::vector<double> mean;
    std::vector<double> std_dev; ///< sample std (n-1 denominator)
    std::vector<Histogram> histograms;
};

/// Maximum-likelihood weights: runs the SFP sampler on the posterior
/// energy over the prior box and returns the per-coordinate argmax of
/// the averaged marginal densities.
std::vector<double> mle_train(const PosteriorSpec& spec, const SfpConfig& config);

/// Bayesian ensemble prediction at one input: after every sweep the
/// network is evaluated at the freshly drawn weight vector; the sample
/// set (size = sweeps minus burn-in) is summarized per output with
/// Freedman-Diaconis histograms (at least 10 bins).
PredictionSummary bayes_predict(const PosteriorSpec& spec, const SfpConfig& config,
                                const std::vector<double>& test_input);

/// Backtracking steepest descent from `start`: steps along the
/// normalized negative gradient, halving (times `shrink`) on failure to
/// decrease, clipped to the space. Stops when the step falls below
/// `tol` or after `max_iters` accepted/rejected steps. The returned
/// value never exceeds the starting value.
std::pair<std::vector<double>, double> steepest_descent_refine(
    const CostModel& cost, const SearchSpace& space, std::vector<double> start,
    double step0, double shrink, double tol, int max_iters);

/// Runs the sampler once per nested dataset and reports the peak height
/// of the averaged marginal density of weight `weight_index` for each
/// dataset size. Datasets must be nested by inclusion (each a prefix of
/// the next); an empty dataset is allowed and samples the flat prior.
std::vector<double> evidence_sharpening_experiment(
    const MlpModel& model, const std::vector<Dataset>& nested_datasets,
    const PosteriorSpec& spec_template, const SfpConfig& config, std::size_t weight_index);

} // namespace sfpl
