#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "sfpl/basis.hpp"
#include "sfpl/config.hpp"
#include "sfpl/cost.hpp"
#include "sfpl/expansion.hpp"
#include "sfpl/linalg.hpp"
#include "sfpl/state.hpp"

namespace sfpl {

/// Precomputed basis evaluations for one coordinate interval, shared by
/// every solve over the same (bounds, L, T). Holds the collocation
/// grid, the second/first-derivative rows, the inversion-table grid and
/// a dense grid for density argmax scans.
class CollocationTables {
public:
    static constexpr int kArgmaxGrid = 1024;

    CollocationTables(const SineBasis& basis, int table_resolution);

    const SineBasis& basis() const { return basis_; }
    int terms() const { return basis_.terms(); }
    int table_resolution() const { return t_; }

    /// Interior collocation nodes x_k = lower + k h, k = 1..L-1.
    const std::vector<double>& nodes() const { return nodes_; }

    /// ddphi_j(x_k), row k, column j, (L-1) x L.
    const Matrix& second_derivative_rows() const { return dd_; }

    /// dphi_j(x_k), row k, column j, (L-1) x L.
    const Matrix& first_derivative_rows() const { return dp_; }

    /// Uniform inversion grid of T+1 points spanning [lower, upper].
    const std::vector<double>& inversion_grid() const { return tgrid_; }

    /// phi_j(t_i) on the inversion grid, (T+1) x L.
    const Matrix& inversion_rows() const { return phi_t_; }

    /// Dense argmax-scan grid (kArgmaxGrid points) and dphi_j rows on it.
    const std::vector<double>& argmax_grid() const { return ggrid_; }
    const Matrix& argmax_rows() const { return dphi_g_; }

private:
    SineBasis basis_;
    int t_;
    std::vector<double> nodes_;
    Matrix dd_;
    Matrix dp_;
    std::vector<double> tgrid_;
    Matrix phi_t_;
    std::vector<double> ggrid_;
    Matrix dphi_g_;
};

/// Assembles the L x L collocation system for coordinate n at the
/// current state: rows 1..L-1 impose y'' + (dV/dx_n / D) y' = 0 at the
/// interior nodes, the last row imposes y(upper) = 1.
std::pair<Matrix, std::vector<double>> build_collocation_system(
    const CostModel& cost, const SamplerState& state, std::size_t n,
    const SfpConfig& config, const SearchSpace& space);

/// Assembles and solves the system, returning the conditional CDF.
CdfExpansion solve_conditional_cdf(const CostModel& cost, const SamplerState& state,
                                   std::size_t n, const SfpConfig& config,
                                   const SearchSpace& space);

/// Gradient slice of the cost along coordinate n at the collocation
/// nodes, all other coordinates fixed at the state values. Throws
/// SingularCostError on non-finite partials. Appends one entry per node
/// to `out` after clearing it.
void gradient_slice(const CostModel& cost, const SamplerState& state, std::size_t n,
                    const CollocationTables& tables, std::vector<double>& out);

/// Fast path: solve the conditional system from a precomputed gradient
/// slice using shared tables. Returns the coefficient vector.
std::vector<double> solve_with_tables(const CollocationTables& tables,
                                      const std::vector<double>& gradient, double D);

} // namespace sfpl
