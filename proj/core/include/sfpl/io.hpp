#pragma once

#include <string>
#include <vector>

#include "sfpl/accumulator.hpp"
#include "sfpl/expansion.hpp"
#include "sfpl/sampler.hpp"

namespace sfpl {

/// Shortest exact decimal representation (printf %.17g trimmed to the
/// shortest string that round-trips); used by every writer so repeated
/// runs emit byte-identical files.
std::string format_double(double v);

/// Writes `sweep,av,s,cost_at_argmax,argmax_1..argmax_N` rows.
void write_diagnostics_csv(const std::vector<SweepRecord>& records, std::size_t dims,
                           const std::string& path);

/// Writes `x,cdf,pdf` on a uniform grid. Density values are clamped at
/// zero in the file only; returns how many points were clamped.
int write_density_table(const CdfExpansion& expansion, const std::string& path,
                        int points = 512);

/// JSON export of the averaged marginals:
/// {dims, bounds, L, D, mean_coeffs, update_count}.
std::string marginals_to_json(const MarginalAccumulator& acc, double D);

/// Writes `sweep,s1,s2,abs_diff` rows for a two-trajectory comparison.
void write_two_trajectory_csv(const std::vector<double>& s1, const std::vector<double>& s2,
                              const std::string& path);

void write_text_file(const std::string& path, const std::string& content);

} // namespace sfpl
