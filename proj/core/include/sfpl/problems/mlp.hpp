#pragma once

#include <cstddef>
#include <vector>

#include "sfpl/cost.hpp"
#include "sfpl/problems/dataset.hpp"

namespace sfpl {

enum class Activation {
    logistic, ///< 1 / (1 + exp(-z))
    tanh_fn,  ///< hyperbolic tangent
    linear    ///< identity (output layers of regression nets)
};

/// Single-hidden-layer perceptron with a flat parameter layout:
/// input->hidden weights row by row (W1[j][i] = w[j*input_dim + i]),
/// then hidden biases, then hidden->output weights (W2[k][j]), then
/// output biases.
struct MlpModel {
    int input_dim = 0;
    int hidden_units = 0;
    int output_dim = 0;
    Activation hidden_activation = Activation::logistic;
    Activation output_activation = Activation::linear;

    int param_count() const {
        return input_dim * hidden_units + hidden_units +
               hidden_units * output_dim + output_dim;
    }
};

/// Feedforward pass. Throws ConfigError on any dimension mismatch.
std::vector<double> mlp_forward(const MlpModel& model, const std::vector<double>& w,
                                const std::vector<double>& input);

/// Total squared error over the dataset: sum_s ||f(X_s, w) - Y_s||^2.
double sse_loss(const MlpModel& model, const std::vector<double>& w, const Dataset& data);

/// Gradient of sse_loss by backpropagation.
std::vector<double> sse_grad(const MlpModel& model, const std::vector<double>& w,
                             const Dataset& data);

/// sse_loss as a CostModel over the flat weight vector. `scale`
/// multiplies both the value and the partials (1 for the raw total;
/// 1/size for a per-sample average).
class SseCost : public CostModel {
public:
    SseCost(MlpModel model, Dataset data, double scale = 1.0);

    std::size_t dim() const override { return static_cast<std::size_t>(model_.param_count()); }
    double value(const std::vector<double>& w) const override;
    double partial(const std::vector<double>& w, std::size_t n) const override;

    const MlpModel& model() const { return model_; }
    const Dataset& data() const { return data_; }
    double scale() const { return scale_; }

private:
    MlpModel model_;
    Dataset data_;
    double scale_;
};

} // namespace sfpl
