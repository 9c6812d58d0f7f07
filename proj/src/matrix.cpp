#include "poselift/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace poselift::num {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> vals) {
    Matrix m(vals.size(), vals.size() ? vals.begin()->size() : 0);
    std::size_t r = 0;
    for (const auto& row : vals) {
        if (row.size() != m.cols) throw ShapeError("from_rows: ragged initializer");
        std::copy(row.begin(), row.end(), m.row_ptr(r++));
    }
    return m;
}

bool Matrix::all_finite() const {
    for (double v : data) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

std::string Matrix::shape_str() const {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%zux%zu", rows, cols);
    return buf;
}

std::string shape_pair_str(const Matrix& a, const Matrix& b) {
    return a.shape_str() + " and " + b.shape_str();
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) {
        throw ShapeError("matmul: inner dimensions disagree for shapes " + shape_pair_str(a, b));
    }
    Matrix c(a.rows, b.cols, 0.0);
    matmul_acc(a, b, c);
    return c;
}

void matmul_acc(const Matrix& a, const Matrix& b, Matrix& c) {
    if (a.cols != b.rows || c.rows != a.rows || c.cols != b.cols) {
        throw ShapeError("matmul_acc: incompatible shapes " + shape_pair_str(a, b) +
                         " into " + c.shape_str());
    }
    // i-k-j order keeps the b and c row accesses contiguous.
    const std::size_t n = b.cols;
    for (std::size_t i = 0; i < a.rows; ++i) {
        const double* arow = a.row_ptr(i);
        double* crow = c.row_ptr(i);
        for (std::size_t k = 0; k < a.cols; ++k) {
            const double aik = arow[k];
            if (aik == 0.0) continue;
            const double* brow = b.row_ptr(k);
            for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols, m.rows);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) t(c, r) = m(r, c);
    return t;
}

Matrix add(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) throw ShapeError("add: shapes disagree: " + shape_pair_str(a, b));
    Matrix c = a;
    for (std::size_t i = 0; i < c.data.size(); ++i) c.data[i] += b.data[i];
    return c;
}

Matrix sub(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) throw ShapeError("sub: shapes disagree: " + shape_pair_str(a, b));
    Matrix c = a;
    for (std::size_t i = 0; i < c.data.size(); ++i) c.data[i] -= b.data[i];
    return c;
}

Matrix scale(const Matrix& m, double s) {
    Matrix c = m;
    for (double& v : c.data) v *= s;
    return c;
}

Matrix softmax_rows(const Matrix& m) {
    Matrix out(m.rows, m.cols);
    for (std::size_t r = 0; r < m.rows; ++r) {
        const double* in = m.row_ptr(r);
        double* o = out.row_ptr(r);
        double mx = in[0];
        for (std::size_t c = 1; c < m.cols; ++c) mx = std::max(mx, in[c]);
        double sum = 0.0;
        for (std::size_t c = 0; c < m.cols; ++c) {
            o[c] = std::exp(in[c] - mx);
            sum += o[c];
        }
        const double inv = 1.0 / sum;
        for (std::size_t c = 0; c < m.cols; ++c) o[c] *= inv;
    }
    return out;
}

Matrix add_row_broadcast(const Matrix& x, const Matrix& bias_row) {
    if (bias_row.rows != 1 || bias_row.cols != x.cols) {
        throw ShapeError("add_row_broadcast: bias " + bias_row.shape_str() +
                         " does not broadcast over " + x.shape_str());
    }
    Matrix out = x;
    for (std::size_t r = 0; r < out.rows; ++r) {
        double* o = out.row_ptr(r);
        for (std::size_t c = 0; c < out.cols; ++c) o[c] += bias_row.data[c];
    }
    return out;
}

void add_in_place(Matrix& dst, const Matrix& src) {
    if (!dst.same_shape(src))
        throw ShapeError("add_in_place: shapes disagree: " + shape_pair_str(dst, src));
    for (std::size_t i = 0; i < dst.data.size(); ++i) dst.data[i] += src.data[i];
}

void scale_in_place(Matrix& m, double s) {
    for (double& v : m.data) v *= s;
}

double sum_all(const Matrix& m) {
    double s = 0.0;
    for (double v : m.data) s += v;
    return s;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b))
        throw ShapeError("max_abs_diff: shapes disagree: " + shape_pair_str(a, b));
    double d = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i)
        d = std::max(d, std::abs(a.data[i] - b.data[i]));
    return d;
}

} // namespace poselift::num
