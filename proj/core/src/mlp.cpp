#include "sfpl/problems/mlp.hpp"

#include <cmath>
#include <string>

#include "sfpl/errors.hpp"

namespace sfpl {

namespace {

double apply_activation(Activation a, double z) {
    switch (a) {
        case Activation::logistic: return 1.0 / (1.0 + std::exp(-z));
        case Activation::tanh_fn: return std::tanh(z);
        case Activation::linear: return z;
    }
    return z;
}

/// Derivative expressed through the activation output.
double activation_slope(Activation a, double out) {
    switch (a) {
        case Activation::logistic: return out * (1.0 - out);
        case Activation::tanh_fn: return 1.0 - out * out;
        case Activation::linear: return 1.0;
    }
    return 1.0;
}

void check_shapes(const MlpModel& model, const std::vector<double>& w,
                  const std::vector<double>& input) {
    if (model.input_dim < 1 || model.hidden_units < 1 || model.output_dim < 1)
        throw ConfigError("MlpModel: dimensions must be positive");
    if (w.size() != static_cast<std::size_t>(model.param_count()))
        throw ConfigError("mlp: expected " + std::to_string(model.param_count()) +
                          " parameters, got " + std::to_string(w.size()));
    if (input.size() != static_cast<std::size_t>(model.input_dim))
        throw ConfigError("mlp: input dimension mismatch");
}

struct Layout {
    int w1, b1, w2, b2; ///< block offsets into the flat vector
    explicit Layout(const MlpModel& m)
        : w1(0),
          b1(m.input_dim * m.hidden_units),
          w2(m.input_dim * m.hidden_units + m.hidden_units),
          b2(m.input_dim * m.hidden_units + m.hidden_units + m.hidden_units * m.output_dim) {}
};

void forward_into(const MlpModel& model, const std::vector<double>& w,
                  const double* input, std::vector<double>& hidden,
                  std::vector<double>& output) {
    const Layout lay(model);
    const int nin = model.input_dim, nh = model.hidden_units, nout = model.output_dim;
    hidden.resize(nh);
    output.resize(nout);
    for (int j = 0; j < nh; ++j) {
        double z = w[lay.b1 + j];
        const double* row = w.data() + lay.w1 + j * nin;
        for (int i = 0; i < nin; ++i) z += row[i] * input[i];
        hidden[j] = apply_activation(model.hidden_activation, z);
    }
    for (int k = 0; k < nout; ++k) {
        double z = w[lay.b2 + k];
        const double* row = w.data() + lay.w2 + k * nh;
        for (int j = 0; j < nh; ++j) z += row[j] * hidden[j];
        output[k] = apply_activation(model.output_activation, z);
    }
}

void check_dataset(const MlpModel& model, const Dataset& data) {
    data.validate();
    if (data.size() == 0) throw ConfigError("mlp: dataset is empty");
    if (data.inputs[0].size() != static_cast<std::size_t>(model.input_dim) ||
        data.targets[0].size() != static_cast<std::size_t>(model.output_dim))
        throw ConfigError("mlp: dataset dimensions do not match the model");
}

} // namespace

std::vector<double> mlp_forward(const MlpModel& model, const std::vector<double>& w,
                                const std::vector<double>& input) {
    check_shapes(model, w, input);
    std::vector<double> hidden, output;
    forward_into(model, w, input.data(), hidden, output);
    return output;
}

double sse_loss(const MlpModel& model, const std::vector<double>& w, const Dataset& data) {
    check_shapes(model, w, data.inputs.empty() ? std::vector<double>(model.input_dim, 0.0)
                                               : data.inputs[0]);
    check_dataset(model, data);
    thread_local std::vector<double> hidden, output;
    double total = 0.0;
    for (std::size_t s = 0; s < data.size(); ++s) {
        forward_into(model, w, data.inputs[s].data(), hidden, output);
        for (int k = 0; k < model.output_dim; ++k) {
            const double r = output[k] - data.targets[s][k];
            total += r * r;
        }
    }
    return total;
}

std::vector<double> sse_grad(const MlpModel& model, const std::vector<double>& w,
                             const Dataset& data) {
    check_shapes(model, w, data.inputs.empty() ? std::vector<double>(model.input_dim, 0.0)
                                               : data.inputs[0]);
    check_dataset(model, data);
    const Layout lay(model);
    const int nin = model.input_dim, nh = model.hidden_units, nout = model.output_dim;
    std::vector<double> grad(w.size(), 0.0);
    thread_local std::vector<double> hidden, output, delta_out, delta_hidden;
    delta_out.resize(nout);
    delta_hidden.resize(nh);
    for (std::size_t s = 0; s < data.size(); ++s) {
        const double* input = data.inputs[s].data();
        forward_into(model, w, input, hidden, output);
        for (int k = 0; k < nout; ++k) {
            const double r = output[k] - data.targets[s][k];
            delta_out[k] = 2.0 * r * activation_slope(model.output_activation, output[k]);
        }
        for (int j = 0; j < nh; ++j) {
            double acc = 0.0;
            for (int k = 0; k < nout; ++k) acc += delta_out[k] * w[lay.w2 + k * nh + j];
            delta_hidden[j] = acc * activation_slope(model.hidden_activation, hidden[j]);
        }
        for (int k = 0; k < nout; ++k) {
            for (int j = 0; j < nh; ++j) grad[lay.w2 + k * nh + j] += delta_out[k] * hidden[j];
            grad[lay.b2 + k] += delta_out[k];
        }
        for (int j = 0; j < nh; ++j) {
            for (int i = 0; i < nin; ++i) grad[lay.w1 + j * nin + i] += delta_hidden[j] * input[i];
            grad[lay.b1 + j] += delta_hidden[j];
        }
    }
    return grad;
}

SseCost::SseCost(MlpModel model, Dataset data, double scale)
    : model_(model), data_(std::move(data)), scale_(scale) {
    check_dataset(model_, data_);
    if (!(scale_ > 0.0)) throw ConfigError("SseCost: scale must be positive");
}

double SseCost::value(const std::vector<double>& w) const {
    return scale_ * sse_loss(model_, w, data_);
}

double SseCost::partial(const std::vector<double>& w, std::size_t n) const {
    if (n >= dim()) throw ConfigError("SseCost: coordinate index out of range");
    const Layout lay(model_);
    const int nin = model_.input_dim, nh = model_.hidden_units, nout = model_.output_dim;
    thread_local std::vector<double> hidden, output;

    double acc = 0.0;
    const int idx = static_cast<int>(n);
    for (std::size_t s = 0; s < data_.size(); ++s) {
        const double* input = data_.inputs[s].data();
        forward_into(model_, w, input, hidden, output);
        if (idx >= lay.b2) {
            const int k = idx - lay.b2;
            const double r = output[k] - data_.targets[s][k];
            acc += 2.0 * r * activation_slope(model_.output_activation, output[k]);
        } else if (idx >= lay.w2) {
            const int k = (idx - lay.w2) / nh;
            const int j = (idx - lay.w2) % nh;
            const double r = output[k] - data_.targets[s][k];
            acc += 2.0 * r * activation_slope(model_.output_activation, output[k]) * hidden[j];
        } else {
            const int j = (idx >= lay.b1) ? (idx - lay.b1) : (idx / nin);
            double dj = 0.0;
            for (int k = 0; k < nout; ++k) {
                const double r = output[k] - data_.targets[s][k];
                dj += 2.0 * r * activation_slope(model_.output_activation, output[k]) *
                      w[lay.w2 + k * nh + j];
            }
            dj *= activation_slope(model_.hidden_activation, hidden[j]);
            acc += (idx >= lay.b1) ? dj : dj * input[idx % nin];
        }
    }
    return scale_ * acc;
}

} // namespace sfpl
