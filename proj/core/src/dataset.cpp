#include "sfpl/problems/dataset.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sfpl/errors.hpp"
#include "sfpl/io.hpp"

namespace sfpl {

void Dataset::validate() const {
    if (inputs.size() != targets.size())
        throw ConfigError("Dataset: inputs and targets must have equal length");
    if (noise_sigma < 0.0) throw ConfigError("Dataset: noise_sigma must be nonnegative");
    for (std::size_t s = 0; s < inputs.size(); ++s) {
        if (inputs[s].size() != inputs[0].size() || targets[s].size() != targets[0].size())
            throw ConfigError("Dataset: ragged rows at sample " + std::to_string(s));
    }
}

Dataset Dataset::prefix(std::size_t n) const {
    if (n > size()) throw ConfigError("Dataset::prefix: subset larger than the dataset");
    Dataset d;
    d.noise_sigma = noise_sigma;
    d.inputs.assign(inputs.begin(), inputs.begin() + n);
    d.targets.assign(targets.begin(), targets.begin() + n);
    return d;
}

void save_dataset_csv(const Dataset& data, const std::string& path,
                      const std::string& generator, long seed) {
    data.validate();
    if (data.size() == 0) throw ConfigError("save_dataset_csv: empty dataset");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    const std::size_t nin = data.inputs[0].size();
    const std::size_t nout = data.targets[0].size();
    for (std::size_t i = 1; i <= nin; ++i) out << "x" << i << ",";
    for (std::size_t k = 1; k <= nout; ++k) out << "y" << k << (k < nout ? "," : "");
    out << "\n";
    for (std::size_t s = 0; s < data.size(); ++s) {
        for (std::size_t i = 0; i < nin; ++i) out << format_double(data.inputs[s][i]) << ",";
        for (std::size_t k = 0; k < nout; ++k)
            out << format_double(data.targets[s][k]) << (k + 1 < nout ? "," : "");
        out << "\n";
    }

    nlohmann::json meta;
    meta["n_samples"] = data.size();
    meta["input_dim"] = nin;
    meta["output_dim"] = nout;
    meta["noise_sigma"] = data.noise_sigma;
    if (!generator.empty()) {
        meta["generator"] = generator;
        meta["seed"] = seed;
    }
    write_text_file(path + ".meta.json", meta.dump(2) + "\n");
}

Dataset load_dataset_csv(const std::string& path, std::size_t input_dim) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    Dataset d;
    std::string line;
    if (!std::getline(in, line)) throw Error("empty dataset file " + path);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        if (row.size() <= input_dim)
            throw Error("dataset row with too few columns in " + path);
        d.inputs.push_back({row.begin(), row.begin() + input_dim});
        d.targets.push_back({row.begin() + input_dim, row.end()});
    }

    std::ifstream meta_in(path + ".meta.json");
    if (meta_in) {
        nlohmann::json meta = nlohmann::json::parse(meta_in, nullptr, false);
        if (!meta.is_discarded() && meta.contains("noise_sigma"))
            d.noise_sigma = meta["noise_sigma"].get<double>();
    }
    d.validate();
    return d;
}

} // namespace sfpl
