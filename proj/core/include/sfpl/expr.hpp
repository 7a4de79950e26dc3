#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "sfpl/cost.hpp"

namespace sfpl {

/// Small closed-form expression over variables x1..xN supporting
/// + - * / ^, unary minus, sin, cos, exp, log, numeric literals and
/// parentheses. Expressions are immutable trees shareable across
/// threads; differentiation is symbolic.
class Expr {
public:
    struct Node;

    /// Parses the grammar above; throws ConfigError with a position on
    /// syntax errors.
    static Expr parse(const std::string& text);

    double eval(const std::vector<double>& x) const;

    /// Symbolic partial derivative with respect to x_(n+1).
    Expr derivative(std::size_t n) const;

    /// Number of variables: one past the highest x-index referenced.
    std::size_t variable_count() const;

    std::string to_string() const;

private:
    explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
    std::shared_ptr<const Node> root_;
};

/// CostModel over an expression and the symbolic partials of every
/// coordinate, precomputed at construction.
class ExprCost : public CostModel {
public:
    /// dims defaults to the expression's variable count when 0.
    explicit ExprCost(const std::string& text, std::size_t dims = 0);

    std::size_t dim() const override { return dims_; }
    double value(const std::vector<double>& x) const override;
    double partial(const std::vector<double>& x, std::size_t n) const override;

    const Expr& expression() const { return expr_; }

private:
    Expr expr_;
    std::size_t dims_;
    std::vector<Expr> partials_;
};

} // namespace sfpl
