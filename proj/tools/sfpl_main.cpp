// sfpl: command-line driver for the stationary Fokker-Planck learning library.
//
// One binary, seven experiments. A flat JSON config file supplies any
// subset of the keys; command-line flags override it; anything left
// unset falls back to the experiment's canonical defaults. Outputs are
// plot-ready CSV plus a JSON report, written so that re-running the
// same configuration reproduces every file byte for byte.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sfpl/sfpl.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace sfpl;

namespace {

const std::vector<std::string> kExperiments = {
    "michalewicz",     "xor-optimize",    "xor-convergence", "xor-evidence",
    "robot-arm-train", "robot-arm-predict", "custom-cost"};

json defaults_for(const std::string& experiment) {
    json d;
    d["experiment"] = experiment;
    d["out"] = "out";
    d["table_resolution"] = 1024;
    d["burn_in"] = 0;
    d["sweep_order"] = "cyclic";
    if (experiment == "michalewicz") {
        d["D"] = 0.4;
        d["L"] = 20;
        d["sweeps"] = 1;
        d["seed"] = 1;
        d["m"] = 10;
    } else if (experiment == "xor-optimize" || experiment == "xor-convergence" ||
               experiment == "xor-evidence") {
        d["D"] = 0.01;
        d["L"] = 200;
        d["sweeps"] = 300;
        d["seed"] = 7;
        d["prior_low"] = -10.0;
        d["prior_high"] = 10.0;
        d["loss_scale"] = "total";
        if (experiment == "xor-convergence") {
            d["seed2"] = 11;
            d["tail_start"] = 100;
        }
        if (experiment == "xor-evidence") {
            d["sweeps"] = 100;
            d["seed"] = 5;
            d["weight"] = 5;
        }
    } else if (experiment == "robot-arm-train" || experiment == "robot-arm-predict") {
        d["D"] = 0.00125;
        d["L"] = 300;
        d["sweeps"] = 300;
        d["seed"] = 7;
        d["samples"] = 200;
        d["hidden"] = 16;
        d["data_seed"] = 42;
        d["noise_sigma"] = 0.1;
        d["dataset"] = "";
        d["prior_low"] = -1.0;
        d["prior_high"] = 1.0;
        d["loss_scale"] = "per_sample";
        if (experiment == "robot-arm-predict")
            d["test_input"] = json::array({-1.471, 0.752});
    } else if (experiment == "custom-cost") {
        d["D"] = 1.0;
        d["L"] = 30;
        d["sweeps"] = 20;
        d["seed"] = 1;
        d["cost"] = "";
        d["dims"] = 0;
        d["lower"] = -1.0;
        d["upper"] = 1.0;
    }
    return d;
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void merge_overrides(json& base, const json& over, const std::string& origin) {
    for (auto it = over.begin(); it != over.end(); ++it) {
        if (it.key() == "experiment") continue;
        if (!base.contains(it.key()))
            throw UsageError(origin + ": key '" + it.key() + "' does not apply to experiment '" +
                             base["experiment"].get<std::string>() + "'");
        base[it.key()] = it.value();
    }
}

SfpConfig sfp_config_from(const json& c) {
    SfpConfig cfg;
    cfg.D = c.at("D").get<double>();
    cfg.L = c.at("L").get<int>();
    cfg.sweeps = c.at("sweeps").get<int>();
    cfg.table_resolution = c.at("table_resolution").get<int>();
    cfg.seed = c.at("seed").get<std::uint64_t>();
    cfg.burn_in = c.at("burn_in").get<int>();
    const std::string order = c.at("sweep_order").get<std::string>();
    if (order == "cyclic")
        cfg.sweep_order = SweepOrder::cyclic;
    else if (order == "shuffled" || order == "shuffled-per-sweep")
        cfg.sweep_order = SweepOrder::shuffled_per_sweep;
    else
        throw UsageError("sweep_order must be 'cyclic' or 'shuffled-per-sweep'");
    cfg.validate();
    return cfg;
}

LossScale loss_scale_from(const json& c) {
    const std::string s = c.at("loss_scale").get<std::string>();
    if (s == "total") return LossScale::total;
    if (s == "per_sample") return LossScale::per_sample;
    throw UsageError("loss_scale must be 'total' or 'per_sample'");
}

std::string density_name(std::size_t dim_1based) {
    return "density_dim" + std::to_string(dim_1based) + ".csv";
}

void write_json_file(const fs::path& path, const json& j) {
    write_text_file(path.string(), j.dump(2) + "\n");
}

void write_run_outputs(const SfpResult& res, std::size_t dims, double D, const fs::path& out) {
    write_diagnostics_csv(res.records, dims, (out / "diagnostics.csv").string());
    if (res.completed_sweeps > 0) {
        for (std::size_t n = 0; n < dims; ++n)
            write_density_table(res.acc.marginal(n), (out / density_name(n + 1)).string());
        write_text_file((out / "marginals.json").string(), marginals_to_json(res.acc, D));
    }
}

int fail_run(const json& resolved, const fs::path& out, const std::string& message,
             int completed_sweeps, long gradient_evals) {
    json err;
    err["experiment"] = resolved.at("experiment");
    err["error"] = message;
    err["completed_sweeps"] = completed_sweeps;
    err["gradient_evals"] = gradient_evals;
    write_json_file(out / "error.json", err);
    std::fprintf(stderr, "error: %s\n", message.c_str());
    return 1;
}

json record_to_json(const SweepRecord& rec) {
    json j;
    j["sweep"] = rec.sweep;
    j["av"] = rec.av;
    j["s"] = rec.s;
    j["argmax"] = rec.argmax;
    j["cost_at_argmax"] = rec.cost_at_argmax;
    return j;
}

// Experiment preparation: everything that can reject a configuration
// happens before any file or directory is created.

struct Prepared {
    std::function<int(const json&, const fs::path&)> run;
    std::size_t dims = 0;
    std::vector<std::string> manifest;
};

Prepared prepare_michalewicz(const json& c) {
    const int m = c.at("m").get<int>();
    if (m < 1) throw UsageError("m must be a positive integer");
    auto cost = std::make_shared<MichalewiczCost>(m);
    Prepared p;
    p.dims = 2;
    p.manifest = {"diagnostics.csv", density_name(1), density_name(2), "marginals.json",
                  "report.json"};
    p.run = [cost](const json& resolved, const fs::path& out) {
        const SfpConfig cfg = sfp_config_from(resolved);
        const SearchSpace space = michalewicz_space();
        SfpResult res = run_sfp(*cost, space, cfg);
        write_run_outputs(res, space.dims(), cfg.D, out);
        if (!res.ok())
            return fail_run(resolved, out, res.error, res.completed_sweeps, res.gradient_evals);
        const SweepRecord& last = res.records.back();
        json rep;
        rep["experiment"] = resolved.at("experiment");
        rep["config"] = resolved;
        rep["argmax"] = last.argmax;
        rep["cost_at_argmax"] = last.cost_at_argmax;
        rep["av"] = last.av;
        rep["s"] = last.s;
        rep["gradient_evals"] = res.gradient_evals;
        write_json_file(out / "report.json", rep);
        std::printf("michalewicz: argmax=(%s, %s) cost_at_argmax=%s\n",
                    format_double(last.argmax[0]).c_str(), format_double(last.argmax[1]).c_str(),
                    format_double(last.cost_at_argmax).c_str());
        return 0;
    };
    return p;
}

Prepared prepare_xor_optimize(const json& c) {
    const SearchSpace prior = SearchSpace::uniform_box(
        9, c.at("prior_low").get<double>(), c.at("prior_high").get<double>());
    const LossScale scale = loss_scale_from(c);
    Prepared p;
    p.dims = 9;
    p.manifest = {"diagnostics.csv"};
    for (std::size_t n = 1; n <= 9; ++n) p.manifest.push_back(density_name(n));
    p.manifest.push_back("marginals.json");
    p.manifest.push_back("report.json");
    p.run = [prior, scale](const json& resolved, const fs::path& out) {
        const SfpConfig cfg = sfp_config_from(resolved);
        PosteriorSpec spec(xor_model(), xor_dataset(), prior, cfg.D, scale);
        const SseCost cost = spec.cost();
        SfpResult res = run_sfp(cost, prior, cfg);
        write_run_outputs(res, prior.dims(), cfg.D, out);
        if (!res.ok())
            return fail_run(resolved, out, res.error, res.completed_sweeps, res.gradient_evals);
        const SweepRecord& last = res.records.back();
        auto [refined, refined_cost] = steepest_descent_refine(
            cost, prior, last.argmax, 1.0, 0.5, 1e-10, 20000);
        json rep;
        rep["experiment"] = resolved.at("experiment");
        rep["config"] = resolved;
        rep["argmax"] = last.argmax;
        rep["cost_at_argmax"] = last.cost_at_argmax;
        rep["refined_point"] = refined;
        rep["refined_cost"] = refined_cost;
        rep["av"] = last.av;
        rep["s"] = last.s;
        rep["gradient_evals"] = res.gradient_evals;
        write_json_file(out / "report.json", rep);
        std::printf("xor-optimize: cost_at_argmax=%s refined_cost=%s\n",
                    format_double(last.cost_at_argmax).c_str(),
                    format_double(refined_cost).c_str());
        return 0;
    };
    return p;
}

Prepared prepare_xor_convergence(const json& c) {
    const SearchSpace prior = SearchSpace::uniform_box(
        9, c.at("prior_low").get<double>(), c.at("prior_high").get<double>());
    const LossScale scale = loss_scale_from(c);
    const int tail_start = c.at("tail_start").get<int>();
    if (tail_start < 1) throw UsageError("tail_start must be >= 1");
    Prepared p;
    p.dims = 9;
    p.manifest = {"diagnostics.csv", "diagnostics_trajectory2.csv", "trajectory_distance.csv"};
    for (std::size_t n = 1; n <= 9; ++n) p.manifest.push_back(density_name(n));
    p.manifest.push_back("marginals.json");
    p.manifest.push_back("report.json");
    p.run = [prior, scale, tail_start](const json& resolved, const fs::path& out) {
        SfpConfig cfg1 = sfp_config_from(resolved);
        SfpConfig cfg2 = cfg1;
        cfg2.seed = resolved.at("seed2").get<std::uint64_t>();
        PosteriorSpec spec(xor_model(), xor_dataset(), prior, cfg1.D, scale);
        const SseCost cost = spec.cost();
        auto fut = std::async(std::launch::async,
                              [&] { return run_sfp(cost, prior, cfg2); });
        SfpResult r1 = run_sfp(cost, prior, cfg1);
        SfpResult r2 = fut.get();
        write_run_outputs(r1, prior.dims(), cfg1.D, out);
        write_diagnostics_csv(r2.records, prior.dims(),
                              (out / "diagnostics_trajectory2.csv").string());
        if (!r1.ok())
            return fail_run(resolved, out, r1.error, r1.completed_sweeps, r1.gradient_evals);
        if (!r2.ok())
            return fail_run(resolved, out, r2.error, r2.completed_sweeps, r2.gradient_evals);
        std::vector<double> s1, s2;
        for (const auto& rec : r1.records) s1.push_back(rec.s);
        for (const auto& rec : r2.records) s2.push_back(rec.s);
        write_two_trajectory_csv(s1, s2, (out / "trajectory_distance.csv").string());
        const std::vector<double> dist = trajectory_distance(s1, s2);
        json rep;
        rep["experiment"] = resolved.at("experiment");
        rep["config"] = resolved;
        int dropped_power = 0, dropped_geo = 0;
        rep["power_exponent"] = fit_power_law(dist, tail_start, &dropped_power);
        rep["geometric_rate"] = fit_geometric_rate(
            dist, std::min<int>(100, static_cast<int>(dist.size())), &dropped_geo);
        rep["tail_start"] = tail_start;
        rep["dropped_zeros"] = dropped_power;
        rep["dropped_zeros_geometric"] = dropped_geo;
        rep["cost_at_argmax_1"] = r1.records.back().cost_at_argmax;
        rep["cost_at_argmax_2"] = r2.records.back().cost_at_argmax;
        rep["cost_gap"] = std::fabs(r1.records.back().cost_at_argmax -
                                    r2.records.back().cost_at_argmax);
        write_json_file(out / "report.json", rep);
        std::printf("xor-convergence: power_exponent=%s (tail_start=%d) cost_gap=%s\n",
                    format_double(rep["power_exponent"].get<double>()).c_str(), tail_start,
                    format_double(rep["cost_gap"].get<double>()).c_str());
        return 0;
    };
    return p;
}

Prepared prepare_xor_evidence(const json& c) {
    const SearchSpace prior = SearchSpace::uniform_box(
        9, c.at("prior_low").get<double>(), c.at("prior_high").get<double>());
    const LossScale scale = loss_scale_from(c);
    const int weight = c.at("weight").get<int>();
    if (weight < 1 || weight > 9)
        throw UsageError("weight must identify one of the 9 network parameters (1..9)");
    Prepared p;
    p.dims = 9;
    for (int k = 1; k <= 4; ++k)
        p.manifest.push_back("evidence_size" + std::to_string(k) + ".csv");
    p.manifest.push_back("report.json");
    p.run = [prior, scale, weight](const json& resolved, const fs::path& out) {
        const SfpConfig cfg = sfp_config_from(resolved);
        const Dataset full = xor_dataset();
        const std::size_t widx = static_cast<std::size_t>(weight - 1);
        std::vector<Dataset> nested;
        for (std::size_t k = 1; k <= full.size(); ++k) nested.push_back(full.prefix(k));
        PosteriorSpec tmpl(xor_model(), full, prior, cfg.D, scale);
        std::vector<double> peaks;
        int completed = 0;
        try {
            const auto tables = make_collocation_tables(prior, cfg);
            for (const Dataset& data : nested) {
                PosteriorSpec spec(tmpl.model, data, tmpl.prior, cfg.D, scale);
                const SseCost cost = spec.cost();
                SfpResult res = run_sfp(cost, prior, cfg);
                if (!res.ok()) throw Error(res.error);
                const CdfExpansion marg = res.acc.marginal(widx);
                write_density_table(
                    marg, (out / ("evidence_size" + std::to_string(data.size()) + ".csv")).string());
                peaks.push_back(marg.pdf(marginal_argmax(res.acc, widx, *tables[widx])));
                ++completed;
            }
        } catch (const Error& e) {
            return fail_run(resolved, out, e.what(), completed, 0);
        }
        json rep;
        rep["experiment"] = resolved.at("experiment");
        rep["config"] = resolved;
        rep["weight"] = weight;
        rep["peaks"] = peaks;
        rep["peak4_exceeds_peak2"] = peaks[3] > peaks[1];
        rep["ratio_12"] = peaks[0] / peaks[1];
        write_json_file(out / "report.json", rep);
        std::printf("xor-evidence: peaks=(%s, %s, %s, %s) sharpened=%s\n",
                    format_double(peaks[0]).c_str(), format_double(peaks[1]).c_str(),
                    format_double(peaks[2]).c_str(), format_double(peaks[3]).c_str(),
                    peaks[3] > peaks[1] ? "true" : "false");
        return 0;
    };
    return p;
}

Dataset resolve_arm_dataset(const json& c) {
    const std::string path = c.at("dataset").get<std::string>();
    if (!path.empty()) {
        Dataset data = load_dataset_csv(path, 2);
        if (data.noise_sigma == 0.0) data.noise_sigma = c.at("noise_sigma").get<double>();
        return data;
    }
    const int samples = c.at("samples").get<int>();
    if (samples < 1) throw UsageError("samples must be a positive integer");
    return robot_arm_generate(samples, c.at("data_seed").get<std::uint64_t>(),
                              c.at("noise_sigma").get<double>());
}

Prepared prepare_robot_arm_train(const json& c) {
    const int hidden = c.at("hidden").get<int>();
    if (hidden < 1) throw UsageError("hidden must be a positive integer");
    const MlpModel model = robot_arm_model(hidden);
    Dataset data = resolve_arm_dataset(c);
    const SearchSpace prior = SearchSpace::uniform_box(
        static_cast<std::size_t>(model.param_count()), c.at("prior_low").get<double>(),
        c.at("prior_high").get<double>());
    const LossScale scale = loss_scale_from(c);
    Prepared p;
    p.dims = static_cast<std::size_t>(model.param_count());
    p.manifest = {"dataset.csv", "dataset.csv.meta.json", "diagnostics.csv"};
    for (std::size_t n = 1; n <= p.dims; ++n) p.manifest.push_back(density_name(n));
    p.manifest.push_back("marginals.json");
    p.manifest.push_back("report.json");
    p.run = [model, data, prior, scale](const json& resolved, const fs::path& out) {
        const SfpConfig cfg = sfp_config_from(resolved);
        save_dataset_csv(data, (out / "dataset.csv").string(), "robot-arm",
                         resolved.at("dataset").get<std::string>().empty()
                             ? resolved.at("data_seed").get<long>()
                             : 0);
        PosteriorSpec spec(model, data, prior, cfg.D, scale);
        const SseCost cost = spec.cost();
        SfpResult res = run_sfp(cost, prior, cfg);
        write_run_outputs(res, prior.dims(), cfg.D, out);
        if (!res.ok())
            return fail_run(resolved, out, res.error, res.completed_sweeps, res.gradient_evals);
        const std::vector<double>& weights = res.records.back().argmax;
        const double sse = sse_loss(model, weights, spec.dataset);
        json rep;
        rep["experiment"] = resolved.at("experiment");
        rep["config"] = resolved;
        rep["weights"] = weights;
        rep["train_sse"] = sse;
        rep["train_mse_per_sample"] = sse / static_cast<double>(spec.dataset.size());
        rep["cost_at_argmax"] = res.records.back().cost_at_argmax;
        rep["gradient_evals"] = res.gradient_evals;
        write_json_file(out / "report.json", rep);
        std::printf("robot-arm-train: train_mse_per_sample=%s over %zu samples\n",
                    format_double(sse / static_cast<double>(spec.dataset.size())).c_str(),
                    spec.dataset.size());
        return 0;
    };
    return p;
}

Prepared prepare_robot_arm_predict(const json& c) {
    const int hidden = c.at("hidden").get<int>();
    if (hidden < 1) throw UsageError("hidden must be a positive integer");
    const MlpModel model = robot_arm_model(hidden);
    Dataset data = resolve_arm_dataset(c);
    const SearchSpace prior = SearchSpace::uniform_box(
        static_cast<std::size_t>(model.param_count()), c.at("prior_low").get<double>(),
        c.at("prior_high").get<double>());
    const LossScale scale = loss_scale_from(c);
    const auto ti = c.at("test_input");
    if (!ti.is_array() || ti.size() != 2)
        throw UsageError("test_input must be an array of two numbers");
    const std::vector<double> test_input = {ti[0].get<double>(), ti[1].get<double>()};
    Prepared p;
    p.dims = static_cast<std::size_t>(model.param_count());
    p.manifest = {"dataset.csv", "dataset.csv.meta.json", "report.json"};
    p.run = [model, data, prior, scale, test_input](const json& resolved, const fs::path& out) {
        const SfpConfig cfg = sfp_config_from(resolved);
        save_dataset_csv(data, (out / "dataset.csv").string(), "robot-arm",
                         resolved.at("dataset").get<std::string>().empty()
                             ? resolved.at("data_seed").get<long>()
                             : 0);
        PosteriorSpec spec(model, data, prior, cfg.D, scale);
        PredictionSummary pred;
        try {
            pred = bayes_predict(spec, cfg, test_input);
        } catch (const Error& e) {
            return fail_run(resolved, out, e.what(), 0, 0);
        }
        const auto truth = robot_arm_truth(test_input[0], test_input[1]);
        json rep;
        rep["experiment"] = resolved.at("experiment");
        rep["config"] = resolved;
        rep["test_input"] = test_input;
        rep["noiseless_truth"] = json::array({truth.first, truth.second});
        rep["mean"] = pred.mean;
        rep["std_dev"] = pred.std_dev;
        rep["draws"] = pred.samples.empty() ? 0 : pred.samples[0].size();
        json hists = json::array();
        for (const auto& h : pred.histograms) {
            json hj;
            hj["edges"] = h.edges;
            hj["counts"] = h.counts;
            hists.push_back(hj);
        }
        rep["histograms"] = hists;
        rep["samples"] = pred.samples;
        write_json_file(out / "report.json", rep);
        std::printf("robot-arm-predict: mean=(%s, %s) std=(%s, %s)\n",
                    format_double(pred.mean[0]).c_str(), format_double(pred.mean[1]).c_str(),
                    format_double(pred.std_dev[0]).c_str(),
                    format_double(pred.std_dev[1]).c_str());
        return 0;
    };
    return p;
}

Prepared prepare_custom_cost(const json& c) {
    const std::string text = c.at("cost").get<std::string>();
    if (text.empty())
        throw UsageError("custom-cost requires a cost expression (--cost or the 'cost' key)");
    const int dims_req = c.at("dims").get<int>();
    if (dims_req < 0) throw UsageError("dims must be >= 0");
    auto cost = std::make_shared<ExprCost>(text, static_cast<std::size_t>(dims_req));
    if (cost->dim() == 0)
        throw UsageError("cost expression references no variables; name them x1..xN");
    const double lower = c.at("lower").get<double>();
    const double upper = c.at("upper").get<double>();
    const SearchSpace space = SearchSpace::uniform_box(cost->dim(), lower, upper);
    Prepared p;
    p.dims = cost->dim();
    p.manifest = {"diagnostics.csv"};
    for (std::size_t n = 1; n <= p.dims; ++n) p.manifest.push_back(density_name(n));
    p.manifest.push_back("marginals.json");
    p.manifest.push_back("report.json");
    p.run = [cost, space](const json& resolved, const fs::path& out) {
        const SfpConfig cfg = sfp_config_from(resolved);
        SfpResult res = run_sfp(*cost, space, cfg);
        write_run_outputs(res, space.dims(), cfg.D, out);
        if (!res.ok())
            return fail_run(resolved, out, res.error, res.completed_sweeps, res.gradient_evals);
        const SweepRecord& last = res.records.back();
        json rep;
        rep["experiment"] = resolved.at("experiment");
        rep["config"] = resolved;
        rep["expression"] = resolved.at("cost");
        rep["argmax"] = last.argmax;
        rep["cost_at_argmax"] = last.cost_at_argmax;
        rep["av"] = last.av;
        rep["s"] = last.s;
        rep["records"] = json::array();
        for (const auto& rec : res.records) rep["records"].push_back(record_to_json(rec));
        rep["gradient_evals"] = res.gradient_evals;
        write_json_file(out / "report.json", rep);
        std::printf("custom-cost: argmax[0]=%s cost_at_argmax=%s\n",
                    format_double(last.argmax[0]).c_str(),
                    format_double(last.cost_at_argmax).c_str());
        return 0;
    };
    return p;
}

Prepared prepare(const json& c) {
    const std::string exp = c.at("experiment").get<std::string>();
    if (exp == "michalewicz") return prepare_michalewicz(c);
    if (exp == "xor-optimize") return prepare_xor_optimize(c);
    if (exp == "xor-convergence") return prepare_xor_convergence(c);
    if (exp == "xor-evidence") return prepare_xor_evidence(c);
    if (exp == "robot-arm-train") return prepare_robot_arm_train(c);
    if (exp == "robot-arm-predict") return prepare_robot_arm_predict(c);
    if (exp == "custom-cost") return prepare_custom_cost(c);
    throw UsageError("unknown experiment '" + exp + "'");
}

void describe(const json& resolved, const Prepared& prep) {
    const long L = resolved.at("L").get<long>();
    const long M = resolved.at("sweeps").get<long>();
    const long N = static_cast<long>(prep.dims);
    std::printf("experiment: %s\n", resolved.at("experiment").get<std::string>().c_str());
    std::printf("resolved configuration:\n%s\n", resolved.dump(2).c_str());
    std::printf("dimensions: N = %ld parameters\n", N);
    std::printf("estimated gradient evaluations: (L-1)*N*M = %ld*%ld*%ld = %ld\n", L - 1, N, M,
                (L - 1) * N * M);
    std::printf("output files (under %s/):\n", resolved.at("out").get<std::string>().c_str());
    for (const auto& f : prep.manifest) std::printf("  %s\n", f.c_str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sfpl: stationary Fokker-Planck learning experiments"};
    app.get_formatter()->column_width(34);

    std::string experiment, config_path, out_dir, sweep_order, loss_scale, cost_expr,
        dataset_path;
    double D = 0, prior_low = 0, prior_high = 0, noise_sigma = 0, lower = 0, upper = 0;
    int L = 0, sweeps = 0, table_resolution = 0, tail_start = 0, burn_in = 0, m_param = 0,
        hidden = 0, samples = 0, dims = 0, weight = 0;
    std::int64_t seed = 0, seed2 = 0, data_seed = 0;
    std::vector<std::int64_t> seeds;
    std::vector<double> test_input;
    bool describe_only = false;

    app.add_option("--experiment", experiment,
                   "One of: michalewicz, xor-optimize, xor-convergence, xor-evidence, "
                   "robot-arm-train, robot-arm-predict, custom-cost");
    app.add_option("--config", config_path, "Flat JSON config file; flags override its keys");
    app.add_option("--D", D, "Diffusion parameter");
    app.add_option("--L", L, "Basis size per coordinate");
    app.add_option("--sweeps", sweeps, "Number of coordinate sweeps (M)");
    app.add_option("--seed", seed, "Trajectory seed");
    app.add_option("--seeds", seeds, "Two trajectory seeds, comma separated")->delimiter(',');
    app.add_option("--seed2", seed2, "Second trajectory seed");
    app.add_option("--out", out_dir, "Output directory");
    app.add_option("--table-resolution", table_resolution, "Inversion lookup table size");
    app.add_option("--tail-start", tail_start, "First sweep of the power-law fit tail");
    app.add_option("--burn-in", burn_in, "Sweeps discarded before accumulation");
    app.add_option("--sweep-order", sweep_order, "cyclic or shuffled-per-sweep");
    app.add_option("--loss-scale", loss_scale, "Posterior energy scale: total or per_sample");
    app.add_option("--m", m_param, "Michalewicz steepness parameter");
    app.add_option("--hidden", hidden, "Hidden units of the robot-arm network");
    app.add_option("--samples", samples, "Generated robot-arm sample count");
    app.add_option("--data-seed", data_seed, "Dataset generation seed");
    app.add_option("--noise-sigma", noise_sigma, "Observation noise level");
    app.add_option("--dataset", dataset_path, "Load the dataset from this CSV instead");
    app.add_option("--prior-low", prior_low, "Lower prior bound per weight");
    app.add_option("--prior-high", prior_high, "Upper prior bound per weight");
    app.add_option("--cost", cost_expr, "Cost expression over x1..xN for custom-cost");
    app.add_option("--dims", dims, "Dimension override for custom-cost (0 = infer)");
    app.add_option("--lower", lower, "Lower box bound for custom-cost");
    app.add_option("--upper", upper, "Upper box bound for custom-cost");
    app.add_option("--test-input", test_input, "Prediction input, comma separated")
        ->delimiter(',');
    app.add_option("--weight", weight, "Designated weight (1-based) for xor-evidence");
    app.add_flag("--describe", describe_only, "Print the resolved plan without running");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    }

    try {
        json file_cfg = json::object();
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw UsageError("cannot open config file '" + config_path + "'");
            try {
                file_cfg = json::parse(in);
            } catch (const json::exception& e) {
                throw UsageError("config file '" + config_path + "': " + e.what());
            }
            if (!file_cfg.is_object()) throw UsageError("config file must hold a JSON object");
            for (const auto& [key, value] : file_cfg.items())
                if (value.is_object() || (value.is_array() && key != "test_input" &&
                                          key != "seeds"))
                    throw UsageError("config key '" + key + "' must be a flat scalar value");
        }

        std::string exp = experiment;
        if (exp.empty() && file_cfg.contains("experiment"))
            exp = file_cfg.at("experiment").get<std::string>();
        if (exp.empty())
            throw UsageError("an experiment is required (--experiment or the config file)");
        if (std::find(kExperiments.begin(), kExperiments.end(), exp) == kExperiments.end())
            throw UsageError("unknown experiment '" + exp + "'");

        json resolved = defaults_for(exp);
        if (file_cfg.contains("seeds")) {
            const auto& sv = file_cfg.at("seeds");
            if (!sv.is_array() || sv.size() != 2)
                throw UsageError("config key 'seeds' must be an array of two integers");
            file_cfg["seed"] = sv[0];
            file_cfg["seed2"] = sv[1];
            file_cfg.erase("seeds");
        }
        merge_overrides(resolved, file_cfg, "config file");

        json flags = json::object();
        if (app.count("--D")) flags["D"] = D;
        if (app.count("--L")) flags["L"] = L;
        if (app.count("--sweeps")) flags["sweeps"] = sweeps;
        if (app.count("--seed")) flags["seed"] = seed;
        if (app.count("--seed2")) flags["seed2"] = seed2;
        if (app.count("--seeds")) {
            if (seeds.size() != 2) throw UsageError("--seeds takes exactly two values");
            flags["seed"] = seeds[0];
            flags["seed2"] = seeds[1];
        }
        if (app.count("--out")) flags["out"] = out_dir;
        if (app.count("--table-resolution")) flags["table_resolution"] = table_resolution;
        if (app.count("--tail-start")) flags["tail_start"] = tail_start;
        if (app.count("--burn-in")) flags["burn_in"] = burn_in;
        if (app.count("--sweep-order")) flags["sweep_order"] = sweep_order;
        if (app.count("--loss-scale")) flags["loss_scale"] = loss_scale;
        if (app.count("--m")) flags["m"] = m_param;
        if (app.count("--hidden")) flags["hidden"] = hidden;
        if (app.count("--samples")) flags["samples"] = samples;
        if (app.count("--data-seed")) flags["data_seed"] = data_seed;
        if (app.count("--noise-sigma")) flags["noise_sigma"] = noise_sigma;
        if (app.count("--dataset")) flags["dataset"] = dataset_path;
        if (app.count("--prior-low")) flags["prior_low"] = prior_low;
        if (app.count("--prior-high")) flags["prior_high"] = prior_high;
        if (app.count("--cost")) flags["cost"] = cost_expr;
        if (app.count("--dims")) flags["dims"] = dims;
        if (app.count("--lower")) flags["lower"] = lower;
        if (app.count("--upper")) flags["upper"] = upper;
        if (app.count("--test-input")) {
            if (test_input.size() != 2) throw UsageError("--test-input takes exactly two values");
            flags["test_input"] = test_input;
        }
        if (app.count("--weight")) flags["weight"] = weight;
        merge_overrides(resolved, flags, "flag");

        sfp_config_from(resolved); // validate early, before any file exists
        Prepared prep = prepare(resolved);

        if (describe_only) {
            describe(resolved, prep);
            return 0;
        }

        const fs::path out(resolved.at("out").get<std::string>());
        std::error_code ec;
        fs::create_directories(out, ec);
        if (ec) {
            std::fprintf(stderr, "error: cannot create output directory '%s': %s\n",
                         out.string().c_str(), ec.message().c_str());
            return 1;
        }
        return prep.run(resolved, out);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const json::exception& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
