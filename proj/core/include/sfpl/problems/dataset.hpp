#pragma once

#include <string>
#include <vector>

namespace sfpl {

/// Supervised training set: paired input/target vectors plus the
/// observation noise level used to generate it (0 when noiseless).
struct Dataset {
    std::vector<std::vector<double>> inputs;
    std::vector<std::vector<double>> targets;
    double noise_sigma = 0.0;

    std::size_t size() const { return inputs.size(); }

    void validate() const;

    /// First `n` samples as a new dataset (nested subset).
    Dataset prefix(std::size_t n) const;
};

/// Writes `x1,..,xk,y1,..,ym` rows with a header, plus a `<path>.meta.json`
/// sidecar holding noise_sigma, the sample count and optional generator
/// metadata (seed).
void save_dataset_csv(const Dataset& data, const std::string& path,
                      const std::string& generator = "", long seed = 0);

Dataset load_dataset_csv(const std::string& path, std::size_t input_dim);

} // namespace sfpl
