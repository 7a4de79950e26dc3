#include "sfpl/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "sfpl/errors.hpp"

namespace sfpl {

std::string format_double(double v) {
    char buf[40];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    return out;
}

} // namespace

void write_diagnostics_csv(const std::vector<SweepRecord>& records, std::size_t dims,
                           const std::string& path) {
    std::ofstream out = open_out(path);
    out << "sweep,av,s,cost_at_argmax";
    for (std::size_t n = 1; n <= dims; ++n) out << ",argmax_" << n;
    out << "\n";
    for (const SweepRecord& r : records) {
        out << r.sweep << ',' << format_double(r.av) << ',' << format_double(r.s) << ','
            << format_double(r.cost_at_argmax);
        for (double a : r.argmax) out << ',' << format_double(a);
        out << "\n";
    }
}

int write_density_table(const CdfExpansion& expansion, const std::string& path, int points) {
    if (points < 2) throw ConfigError("write_density_table: at least 2 points required");
    std::ofstream out = open_out(path);
    out << "x,cdf,pdf\n";
    const double lo = expansion.lower();
    const double w = expansion.upper() - lo;
    int clamped = 0;
    for (int i = 0; i < points; ++i) {
        const double x = lo + w * i / (points - 1);
        const double c = expansion.cdf(x);
        double p = expansion.pdf(x);
        if (p < 0.0) {
            p = 0.0;
            ++clamped;
        }
        out << format_double(x) << ',' << format_double(c) << ',' << format_double(p) << "\n";
    }
    return clamped;
}

std::string marginals_to_json(const MarginalAccumulator& acc, double D) {
    nlohmann::json j;
    j["dims"] = acc.dims();
    j["L"] = acc.basis_terms();
    j["D"] = D;
    nlohmann::json bounds = nlohmann::json::array();
    nlohmann::json coeffs = nlohmann::json::array();
    nlohmann::json counts = nlohmann::json::array();
    for (std::size_t n = 0; n < acc.dims(); ++n) {
        bounds.push_back({acc.basis(n).lower(), acc.basis(n).upper()});
        coeffs.push_back(acc.mean_coeffs(n));
        counts.push_back(acc.update_count(n));
    }
    j["bounds"] = std::move(bounds);
    j["mean_coeffs"] = std::move(coeffs);
    j["update_count"] = std::move(counts);
    return j.dump(2) + "\n";
}

void write_two_trajectory_csv(const std::vector<double>& s1, const std::vector<double>& s2,
                              const std::string& path) {
    if (s1.size() != s2.size())
        throw ConfigError("write_two_trajectory_csv: series lengths differ");
    std::ofstream out = open_out(path);
    out << "sweep,s1,s2,abs_diff\n";
    for (std::size_t i = 0; i < s1.size(); ++i)
        out << (i + 1) << ',' << format_double(s1[i]) << ',' << format_double(s2[i]) << ','
            << format_double(std::fabs(s1[i] - s2[i])) << "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out = open_out(path);
    out << content;
}

} // namespace sfpl
