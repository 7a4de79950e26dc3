#pragma once

#include <cstddef>
#include <vector>

#include "sfpl/cost.hpp"
#include "sfpl/problems/dataset.hpp"
#include "sfpl/problems/mlp.hpp"

namespace sfpl {

/// XOR network cost over 9 weights: a 2-2-1 logistic MLP evaluated on
/// the four XOR patterns with squared error,
///
///   h1 = s(w1 u + w2 v + w5),  h2 = s(w3 u + w4 v + w6),
///   out = s(w7 h1 + w8 h2 + w9),   s(z) = 1/(1+exp(-z)),
///
/// summed over (u,v,target) in {(0,0,0), (1,1,0), (0,1,1), (1,0,1)}.
/// Written out directly so it can serve as an independent reference for
/// the generic MLP loss.
double xor_cost_value(const std::vector<double>& w);

/// Analytic partial of xor_cost_value.
double xor_cost_partial(const std::vector<double>& w, std::size_t n);

/// The 2-2-1 logistic/logistic architecture whose sse_loss on
/// xor_dataset() reproduces xor_cost_value exactly.
MlpModel xor_model();

/// The four XOR patterns in the fixed order above; noiseless.
Dataset xor_dataset();

class XorCost : public CostModel {
public:
    std::size_t dim() const override { return 9; }
    double value(const std::vector<double>& x) const override { return xor_cost_value(x); }
    double partial(const std::vector<double>& x, std::size_t n) const override {
        return xor_cost_partial(x, n);
    }
};

} // namespace sfpl
