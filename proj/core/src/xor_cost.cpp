#include "sfpl/problems/xor_cost.hpp"

#include <cmath>

#include "sfpl/errors.hpp"

namespace sfpl {

namespace {

double sigm(double z) { return 1.0 / (1.0 + std::exp(-z)); }

struct Pattern {
    double u, v, target;
};

constexpr Pattern kPatterns[4] = {
    {0.0, 0.0, 0.0}, {1.0, 1.0, 0.0}, {0.0, 1.0, 1.0}, {1.0, 0.0, 1.0}};

void check(const std::vector<double>& w) {
    if (w.size() != 9) throw ConfigError("xor_cost: expected 9 weights");
}

} // namespace

double xor_cost_value(const std::vector<double>& w) {
    check(w);
    double total = 0.0;
    for (const Pattern& p : kPatterns) {
        const double h1 = sigm(w[0] * p.u + w[1] * p.v + w[4]);
        const double h2 = sigm(w[2] * p.u + w[3] * p.v + w[5]);
        const double out = sigm(w[6] * h1 + w[7] * h2 + w[8]);
        const double r = out - p.target;
        total += r * r;
    }
    return total;
}

double xor_cost_partial(const std::vector<double>& w, std::size_t n) {
    check(w);
    if (n >= 9) throw ConfigError("xor_cost_partial: coordinate index out of range");
    double total = 0.0;
    for (const Pattern& p : kPatterns) {
        const double h1 = sigm(w[0] * p.u + w[1] * p.v + w[4]);
        const double h2 = sigm(w[2] * p.u + w[3] * p.v + w[5]);
        const double out = sigm(w[6] * h1 + w[7] * h2 + w[8]);
        const double go = 2.0 * (out - p.target) * out * (1.0 - out);
        double d;
        switch (n) {
            case 6: d = h1; break;
            case 7: d = h2; break;
            case 8: d = 1.0; break;
            case 0: d = w[6] * h1 * (1.0 - h1) * p.u; break;
            case 1: d = w[6] * h1 * (1.0 - h1) * p.v; break;
            case 4: d = w[6] * h1 * (1.0 - h1); break;
            case 2: d = w[7] * h2 * (1.0 - h2) * p.u; break;
            case 3: d = w[7] * h2 * (1.0 - h2) * p.v; break;
            default: d = w[7] * h2 * (1.0 - h2); break; // case 5
        }
        total += go * d;
    }
    return total;
}

MlpModel xor_model() {
    MlpModel m;
    m.input_dim = 2;
    m.hidden_units = 2;
    m.output_dim = 1;
    m.hidden_activation = Activation::logistic;
    m.output_activation = Activation::logistic;
    return m;
}

Dataset xor_dataset() {
    Dataset d;
    for (const Pattern& p : kPatterns) {
        d.inputs.push_back({p.u, p.v});
        d.targets.push_back({p.target});
    }
    d.noise_sigma = 0.0;
    return d;
}

} // namespace sfpl
