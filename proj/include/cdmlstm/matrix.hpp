#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace cdmlstm {

// Dense row-major matrix, double precision.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    double* row(std::size_t i) { return data.data() + i * cols; }
    const double* row(std::size_t i) const { return data.data() + i * cols; }
    std::size_t size() const { return data.size(); }
    void fill(double v) { std::fill(data.begin(), data.end(), v); }
    bool all_finite() const;
};

// Rank-3 tensor (outer x mid x inner), row-major. Batches use B x T x F.
struct Tensor3 {
    std::size_t n0 = 0, n1 = 0, n2 = 0;
    std::vector<double> data;

    Tensor3() = default;
    Tensor3(std::size_t a, std::size_t b, std::size_t c, double fill = 0.0)
        : n0(a), n1(b), n2(c), data(a * b * c, fill) {}

    double& at(std::size_t i, std::size_t j, std::size_t k) {
        return data[(i * n1 + j) * n2 + k];
    }
    double at(std::size_t i, std::size_t j, std::size_t k) const {
        return data[(i * n1 + j) * n2 + k];
    }
    double* slab(std::size_t i, std::size_t j) { return data.data() + (i * n1 + j) * n2; }
    const double* slab(std::size_t i, std::size_t j) const {
        return data.data() + (i * n1 + j) * n2;
    }
    std::size_t size() const { return data.size(); }
};

void require_finite(const Matrix& m, const std::string& what);

namespace kernels {

// Every kernel writes each output cell from exactly one thread with a fixed
// inner loop order, so results do not depend on the thread count.

// c = a * b^T (a: m x k, b: n x k, c: m x n)
void matmul_nt(const Matrix& a, const Matrix& b, Matrix& c, bool accumulate = false);

// c = a * b (a: m x k, b: k x n, c: m x n)
void matmul_nn(const Matrix& a, const Matrix& b, Matrix& c, bool accumulate = false);

// c += a^T * b (a: n x m, b: n x k, c: m x k)
void matmul_tn_acc(const Matrix& a, const Matrix& b, Matrix& c);

// out[j] += sum_i a(i, j)
void col_sums_acc(const Matrix& a, std::vector<double>& out);

}  // namespace kernels

}  // namespace cdmlstm
