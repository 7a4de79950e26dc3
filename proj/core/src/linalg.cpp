#include "sfpl/linalg.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "sfpl/errors.hpp"

namespace sfpl {

std::vector<double> Matrix::multiply(const std::vector<double>& v) const {
    std::vector<double> out(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        const double* r = row(i);
        double acc = 0.0;
        for (std::size_t j = 0; j < cols_; ++j) acc += r[j] * v[j];
        out[i] = acc;
    }
    return out;
}

std::vector<double> solve_dense(Matrix a, std::vector<double> b) {
    const std::size_t n = a.rows();
    if (n == 0 || a.cols() != n || b.size() != n)
        throw ConfigError("solve_dense: system must be square and match the rhs");

    // Equilibrate rows to unit inf-norm. Collocation rows span many
    // orders of magnitude (steep-gradient rows against the O(1)
    // boundary row); the scaling is exact and makes both the pivots
    // and the residual test below scale-free.
    for (std::size_t i = 0; i < n; ++i) {
        double row_max = 0.0;
        for (std::size_t j = 0; j < n; ++j) row_max = std::max(row_max, std::fabs(a(i, j)));
        if (!(row_max > 0.0) || !std::isfinite(row_max))
            throw SingularSystemError("solve_dense: row " + std::to_string(i) +
                                      " is zero or non-finite");
        const double inv = 1.0 / row_max;
        for (std::size_t j = 0; j < n; ++j) a(i, j) *= inv;
        b[i] *= inv;
    }
    const Matrix a0 = a;
    const std::vector<double> b0 = b;

    // LU with partial pivoting. Large basis sizes make the system
    // nearly rank-deficient even when it is consistent and the
    // solution is benign, so a tiny pivot is not by itself fatal; only
    // an exact zero stops the factorization. The solution is validated
    // afterwards instead.
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::fabs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double cand = std::fabs(a(i, k));
            if (cand > best) {
                best = cand;
                p = i;
            }
        }
        if (best == 0.0)
            throw SingularSystemError("solve_dense: exactly singular at column " +
                                      std::to_string(k) +
                                      " (D may be too small for this L)");
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            std::swap(b[k], b[p]);
        }
        const double inv_pivot = 1.0 / a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = a(i, k) * inv_pivot;
            if (m == 0.0) continue;
            a(i, k) = m;
            double* ri = a.row(i);
            const double* rk = a.row(k);
            for (std::size_t j = k + 1; j < n; ++j) ri[j] -= m * rk[j];
            b[i] -= m * b[k];
        }
    }

    std::vector<double> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        const double* r = a.row(ii);
        double acc = b[ii];
        for (std::size_t j = ii + 1; j < n; ++j) acc -= r[j] * x[j];
        x[ii] = acc / r[ii];
        if (!std::isfinite(x[ii]))
            throw SingularSystemError(
                "solve_dense: solution overflowed during back substitution "
                "(system near-singular; D may be too small for this L)");
    }

    // Backward-error test on the equilibrated system: with unit rows
    // and |b| <= 1 a trustworthy solution satisfies
    // |a x - b| <= tol * (1 + |x|); anything larger means the
    // factorization met a genuinely defective system.
    double x_inf = 0.0;
    for (double v : x) x_inf = std::max(x_inf, std::fabs(v));
    const std::vector<double> r = a0.multiply(x);
    double res_inf = 0.0;
    for (std::size_t i = 0; i < n; ++i) res_inf = std::max(res_inf, std::fabs(r[i] - b0[i]));
    if (!(res_inf <= 1e-6 * (1.0 + x_inf)))
        throw SingularSystemError("solve_dense: residual " + std::to_string(res_inf) +
                                  " exceeds tolerance (system near-singular; D may be too "
                                  "small for this L)");
    return x;
}

} // namespace sfpl
