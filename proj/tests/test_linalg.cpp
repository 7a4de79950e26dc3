#include <cmath>
#include <vector>

#include "doctest.h"
#include "sfpl/errors.hpp"
#include "sfpl/linalg.hpp"
#include "sfpl/rng.hpp"

using namespace sfpl;

TEST_CASE("matrix multiply") {
    Matrix a(2, 3);
    a(0, 0) = 1.0; a(0, 1) = 2.0; a(0, 2) = 3.0;
    a(1, 0) = 4.0; a(1, 1) = 5.0; a(1, 2) = 6.0;
    const std::vector<double> v{1.0, -1.0, 2.0};
    const std::vector<double> r = a.multiply(v);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == 5.0);
    CHECK(r[1] == 11.0);
}

TEST_CASE("solve identity") {
    Matrix a(3, 3);
    for (std::size_t i = 0; i < 3; ++i) a(i, i) = 1.0;
    const std::vector<double> x = solve_dense(a, {3.0, -1.0, 0.5});
    CHECK(x[0] == 3.0);
    CHECK(x[1] == -1.0);
    CHECK(x[2] == 0.5);
}

TEST_CASE("solve diagonal") {
    Matrix a(2, 2);
    a(0, 0) = 2.0;
    a(1, 1) = 4.0;
    const std::vector<double> x = solve_dense(a, {2.0, 8.0});
    CHECK(x[0] == 1.0);
    CHECK(x[1] == 2.0);
}

TEST_CASE("solve needs pivoting") {
    Matrix a(2, 2);
    a(0, 0) = 0.0; a(0, 1) = 1.0;
    a(1, 0) = 1.0; a(1, 1) = 0.0;
    const std::vector<double> x = solve_dense(a, {5.0, 7.0});
    CHECK(x[0] == 7.0);
    CHECK(x[1] == 5.0);
}

TEST_CASE("random 50x50 recovers the planted solution") {
    const std::size_t n = 50;
    Rng rng(2024);
    Matrix a(n, n);
    std::vector<double> x_true(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.uniform(-1.0, 1.0);
        a(i, i) += n;
        x_true[i] = rng.uniform(-2.0, 2.0);
    }
    const std::vector<double> b = a.multiply(x_true);
    const std::vector<double> x = solve_dense(a, b);
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) err = std::max(err, std::fabs(x[i] - x_true[i]));
    CHECK(err < 1e-10);
}

TEST_CASE("scale invariance of the residual check") {
    // rows of wildly different magnitude must not trip the validation
    Matrix a(2, 2);
    a(0, 0) = 1e12; a(0, 1) = 2e12;
    a(1, 0) = 1e-9; a(1, 1) = -1e-9;
    const std::vector<double> x = solve_dense(a, {3e12, 0.0});
    CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(x[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("shape validation") {
    CHECK_THROWS_AS(solve_dense(Matrix(0, 0), {}), ConfigError);
    CHECK_THROWS_AS(solve_dense(Matrix(2, 3), {1.0, 2.0}), ConfigError);
    CHECK_THROWS_AS(solve_dense(Matrix(2, 2, 1.0), {1.0, 2.0, 3.0}), ConfigError);
}

TEST_CASE("zero row is singular") {
    Matrix a(2, 2);
    a(0, 0) = 1.0; a(0, 1) = 2.0;
    CHECK_THROWS_AS(solve_dense(a, {1.0, 1.0}), SingularSystemError);
}

TEST_CASE("duplicate rows are singular") {
    Matrix a(3, 3);
    for (std::size_t j = 0; j < 3; ++j) {
        a(0, j) = static_cast<double>(j + 1);
        a(1, j) = static_cast<double>(j + 1);
        a(2, j) = static_cast<double>(j * j + 1);
    }
    CHECK_THROWS_AS(solve_dense(a, {1.0, 2.0, 3.0}), SingularSystemError);
}

TEST_CASE("non-finite row is singular") {
    Matrix a(2, 2, 1.0);
    a(0, 1) = std::nan("");
    CHECK_THROWS_AS(solve_dense(a, {1.0, 1.0}), SingularSystemError);
}

TEST_CASE("consistent ill-conditioned system still solves") {
    // nearly parallel rows, right-hand side compatible with x = (2, 1)
    Matrix a(2, 2);
    a(0, 0) = 1.0; a(0, 1) = 1.0;
    a(1, 0) = 1.0; a(1, 1) = 1.0 + 1e-12;
    const std::vector<double> b{3.0, 3.0 + 1e-12};
    const std::vector<double> x = solve_dense(a, b);
    CHECK(x[0] == doctest::Approx(2.0).epsilon(1e-3));
    CHECK(x[1] == doctest::Approx(1.0).epsilon(1e-3));
    const std::vector<double> r = a.multiply(x);
    CHECK(std::fabs(r[0] - b[0]) < 1e-9);
    CHECK(std::fabs(r[1] - b[1]) < 1e-9);
}
