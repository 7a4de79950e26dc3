#include "sfpl/collocation.hpp"

#include <cmath>
#include <string>

#include "sfpl/errors.hpp"

namespace sfpl {

CollocationTables::CollocationTables(const SineBasis& basis, int table_resolution)
    : basis_(basis), t_(table_resolution) {
    const int L = basis.terms();
    const double lo = basis.lower();
    const double hi = basis.upper();
    const double h = basis.width() / L;

    nodes_.resize(L - 1);
    for (int k = 0; k < L - 1; ++k) nodes_[k] = lo + (k + 1) * h;

    dd_ = Matrix(L - 1, L);
    dp_ = Matrix(L - 1, L);
    for (int k = 0; k < L - 1; ++k)
        for (int j = 0; j < L; ++j) {
            dd_(k, j) = basis.ddphi(j, nodes_[k]);
            dp_(k, j) = basis.dphi(j, nodes_[k]);
        }

    tgrid_.resize(t_ + 1);
    phi_t_ = Matrix(t_ + 1, L);
    for (int i = 0; i <= t_; ++i) {
        tgrid_[i] = lo + basis.width() * i / t_;
        for (int j = 0; j < L; ++j) phi_t_(i, j) = basis.phi(j, tgrid_[i]);
    }

    ggrid_.resize(kArgmaxGrid);
    dphi_g_ = Matrix(kArgmaxGrid, L);
    for (int i = 0; i < kArgmaxGrid; ++i) {
        ggrid_[i] = lo + basis.width() * i / (kArgmaxGrid - 1);
        for (int j = 0; j < L; ++j) dphi_g_(i, j) = basis.dphi(j, ggrid_[i]);
    }
}

void gradient_slice(const CostModel& cost, const SamplerState& state, std::size_t n,
                    const CollocationTables& tables, std::vector<double>& out) {
    const auto& nodes = tables.nodes();
    out.clear();
    out.reserve(nodes.size());
    std::vector<double> pt = state.x;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        pt[n] = nodes[k];
        const double g = cost.partial(pt, n);
        if (!std::isfinite(g))
            throw SingularCostError("non-finite partial derivative of coordinate " +
                                    std::to_string(n) + " at collocation node x = " +
                                    std::to_string(nodes[k]));
        out.push_back(g);
    }
}

std::vector<double> solve_with_tables(const CollocationTables& tables,
                                      const std::vector<double>& gradient, double D) {
    const int L = tables.terms();
    Matrix a(L, L);
    const Matrix& dd = tables.second_derivative_rows();
    const Matrix& dp = tables.first_derivative_rows();
    for (int k = 0; k < L - 1; ++k) {
        const double scale = gradient[k] / D;
        const double* ddr = dd.row(k);
        const double* dpr = dp.row(k);
        double* ar = a.row(k);
        for (int j = 0; j < L; ++j) ar[j] = ddr[j] + scale * dpr[j];
    }
    for (int j = 0; j < L; ++j) a(L - 1, j) = tables.basis().boundary_value(j);
    std::vector<double> rhs(L, 0.0);
    rhs[L - 1] = 1.0;
    return solve_dense(std::move(a), std::move(rhs));
}

std::pair<Matrix, std::vector<double>> build_collocation_system(
    const CostModel& cost, const SamplerState& state, std::size_t n,
    const SfpConfig& config, const SearchSpace& space) {
    config.validate();
    if (n >= space.dims() || cost.dim() != space.dims())
        throw ConfigError("build_collocation_system: coordinate index or dimension mismatch");
    const SineBasis basis(config.L, space.lower(n), space.upper(n));
    const CollocationTables tables(basis, config.table_resolution);

    std::vector<double> g;
    gradient_slice(cost, state, n, tables, g);

    const int L = config.L;
    Matrix a(L, L);
    for (int k = 0; k < L - 1; ++k) {
        const double scale = g[k] / config.D;
        for (int j = 0; j < L; ++j)
            a(k, j) = tables.second_derivative_rows()(k, j) + scale * tables.first_derivative_rows()(k, j);
    }
    for (int j = 0; j < L; ++j) a(L - 1, j) = basis.boundary_value(j);
    std::vector<double> rhs(L, 0.0);
    rhs[L - 1] = 1.0;
    return {std::move(a), std::move(rhs)};
}

CdfExpansion solve_conditional_cdf(const CostModel& cost, const SamplerState& state,
                                   std::size_t n, const SfpConfig& config,
                                   const SearchSpace& space) {
    auto [a, rhs] = build_collocation_system(cost, state, n, config, space);
    std::vector<double> coeffs = solve_dense(std::move(a), std::move(rhs));
    return CdfExpansion(SineBasis(config.L, space.lower(n), space.upper(n)), std::move(coeffs));
}

} // namespace sfpl
