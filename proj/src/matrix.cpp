#include "cdmlstm/matrix.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace cdmlstm {

bool Matrix::all_finite() const {
    for (double v : data) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

void require_finite(const Matrix& m, const std::string& what) {
    if (!m.all_finite()) {
        throw std::runtime_error("non-finite value in " + what);
    }
}

namespace kernels {

namespace {

void check_dims(bool ok, const char* op) {
    if (!ok) throw std::invalid_argument(std::string(op) + ": dimension mismatch");
}

// Small products are not worth spawning a team for.
constexpr std::int64_t kParallelCutoff = 16 * 1024;

}  // namespace

void matmul_nt(const Matrix& a, const Matrix& b, Matrix& c, bool accumulate) {
    check_dims(a.cols == b.cols, "matmul_nt");
    if (c.rows != a.rows || c.cols != b.rows) c = Matrix(a.rows, b.rows);
    const std::int64_t m = static_cast<std::int64_t>(a.rows);
    const std::int64_t n = static_cast<std::int64_t>(b.rows);
    const std::int64_t k = static_cast<std::int64_t>(a.cols);
#pragma omp parallel for schedule(static) if (m * n * k > kParallelCutoff)
    for (std::int64_t i = 0; i < m; ++i) {
        const double* arow = a.row(static_cast<std::size_t>(i));
        double* crow = c.row(static_cast<std::size_t>(i));
        for (std::int64_t j = 0; j < n; ++j) {
            const double* brow = b.row(static_cast<std::size_t>(j));
            double acc = 0.0;
            for (std::int64_t p = 0; p < k; ++p) acc += arow[p] * brow[p];
            crow[j] = accumulate ? crow[j] + acc : acc;
        }
    }
}

void matmul_nn(const Matrix& a, const Matrix& b, Matrix& c, bool accumulate) {
    check_dims(a.cols == b.rows, "matmul_nn");
    if (c.rows != a.rows || c.cols != b.cols) c = Matrix(a.rows, b.cols);
    const std::int64_t m = static_cast<std::int64_t>(a.rows);
    const std::int64_t n = static_cast<std::int64_t>(b.cols);
    const std::int64_t k = static_cast<std::int64_t>(a.cols);
#pragma omp parallel for schedule(static) if (m * n * k > kParallelCutoff)
    for (std::int64_t i = 0; i < m; ++i) {
        const double* arow = a.row(static_cast<std::size_t>(i));
        double* crow = c.row(static_cast<std::size_t>(i));
        if (!accumulate) {
            for (std::int64_t j = 0; j < n; ++j) crow[j] = 0.0;
        }
        for (std::int64_t p = 0; p < k; ++p) {
            const double av = arow[p];
            if (av == 0.0) continue;
            const double* brow = b.row(static_cast<std::size_t>(p));
            for (std::int64_t j = 0; j < n; ++j) crow[j] += av * brow[j];
        }
    }
}

void matmul_tn_acc(const Matrix& a, const Matrix& b, Matrix& c) {
    check_dims(a.rows == b.rows, "matmul_tn_acc");
    if (c.rows != a.cols || c.cols != b.cols) {
        throw std::invalid_argument("matmul_tn_acc: output shape mismatch");
    }
    const std::int64_t m = static_cast<std::int64_t>(a.cols);
    const std::int64_t n = static_cast<std::int64_t>(b.cols);
    const std::int64_t k = static_cast<std::int64_t>(a.rows);
#pragma omp parallel for schedule(static) if (m * n * k > kParallelCutoff)
    for (std::int64_t i = 0; i < m; ++i) {
        double* crow = c.row(static_cast<std::size_t>(i));
        for (std::int64_t p = 0; p < k; ++p) {
            const double av = a(static_cast<std::size_t>(p), static_cast<std::size_t>(i));
            if (av == 0.0) continue;
            const double* brow = b.row(static_cast<std::size_t>(p));
            for (std::int64_t j = 0; j < n; ++j) crow[j] += av * brow[j];
        }
    }
}

void col_sums_acc(const Matrix& a, std::vector<double>& out) {
    check_dims(out.size() == a.cols, "col_sums_acc");
    const std::int64_t n = static_cast<std::int64_t>(a.cols);
#pragma omp parallel for schedule(static) if (static_cast<std::int64_t>(a.rows) * n > kParallelCutoff)
    for (std::int64_t j = 0; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < a.rows; ++i) acc += a(i, static_cast<std::size_t>(j));
        out[static_cast<std::size_t>(j)] += acc;
    }
}

}  // namespace kernels

}  // namespace cdmlstm
