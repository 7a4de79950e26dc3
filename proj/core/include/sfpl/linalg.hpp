#pragma once

#include <cstddef>
#include <vector>

namespace sfpl {

/// Dense row-major matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* row(std::size_t i) { return data_.data() + i * cols_; }
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }

    std::vector<double> multiply(const std::vector<double>& v) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Solves A x = b by LU factorization with partial pivoting after row
/// equilibration. Accepts near-singular systems as long as the computed
/// solution is finite and reproduces the right-hand side to a small
/// backward error; throws SingularSystemError otherwise.
std::vector<double> solve_dense(Matrix a, std::vector<double> b);

} // namespace sfpl
