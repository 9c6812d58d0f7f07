#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "poselift/errors.hpp"

namespace poselift::num {

// Dense row-major matrix of 64-bit floats. The single value type shared by
// the autodiff tape, the layers and the geometry code.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> vals);

    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    double* row_ptr(std::size_t r) { return data.data() + r * cols; }
    const double* row_ptr(std::size_t r) const { return data.data() + r * cols; }

    std::size_t size() const { return rows * cols; }
    bool empty() const { return data.empty(); }
    bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
    bool all_finite() const;

    std::string shape_str() const;
};

std::string shape_pair_str(const Matrix& a, const Matrix& b);

// a (m x k) times b (k x n). Throws ShapeError naming both shapes.
Matrix matmul(const Matrix& a, const Matrix& b);

// c += a * b without allocating.
void matmul_acc(const Matrix& a, const Matrix& b, Matrix& c);

Matrix transpose(const Matrix& m);
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& m, double s);

// Row-stabilized softmax: subtracts the row max before exponentiation.
Matrix softmax_rows(const Matrix& m);

// x (L x d) plus bias row (1 x d) broadcast over rows.
Matrix add_row_broadcast(const Matrix& x, const Matrix& bias_row);

void add_in_place(Matrix& dst, const Matrix& src);
void scale_in_place(Matrix& m, double s);

double sum_all(const Matrix& m);
double max_abs_diff(const Matrix& a, const Matrix& b);

} // namespace poselift::num
