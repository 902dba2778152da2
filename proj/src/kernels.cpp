#include "picomt/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

namespace picomt::kernels {

namespace {

Mode default_mode() {
    if (const char* env = std::getenv("PICOMT_KERNELS")) {
        if (std::strcmp(env, "serial") == 0) return Mode::Serial;
        if (std::strcmp(env, "parallel") == 0) return Mode::Parallel;
    }
#ifdef _OPENMP
    return Mode::Parallel;
#else
    return Mode::Serial;
#endif
}

Mode g_mode = default_mode();

void check_matmul_shapes(const Matrix& A, bool ta, const Matrix& B, bool tb, Matrix& C) {
    const int m = ta ? A.cols : A.rows;
    const int k = ta ? A.rows : A.cols;
    const int kb = tb ? B.cols : B.rows;
    const int n = tb ? B.rows : B.cols;
    if (k != kb || C.rows != m || C.cols != n) {
        // Shapes are fixed by the callers; a mismatch is a programming error.
        assert(false && "matmul shape mismatch");
        std::abort();
    }
}

// One output row of C = op(A) * op(B). The k-loop order is the same in all
// four transposition cases, which pins the floating-point result.
inline void matmul_row(const Matrix& A, bool ta, const Matrix& B, bool tb, Matrix& C, bool accumulate, int i) {
    const int n = C.cols;
    const int k_dim = ta ? A.rows : A.cols;
    double* crow = C.row(i);
    if (!accumulate) {
        for (int j = 0; j < n; ++j) crow[j] = 0.0;
    }
    if (!ta && !tb) {
        const double* arow = A.row(i);
        for (int k = 0; k < k_dim; ++k) {
            const double av = arow[k];
            const double* brow = B.row(k);
            for (int j = 0; j < n; ++j) crow[j] += av * brow[j];
        }
    } else if (!ta && tb) {
        const double* arow = A.row(i);
        for (int j = 0; j < n; ++j) {
            const double* brow = B.row(j);
            double acc = 0.0;
            for (int k = 0; k < k_dim; ++k) acc += arow[k] * brow[k];
            crow[j] += acc;
        }
    } else if (ta && !tb) {
        for (int k = 0; k < k_dim; ++k) {
            const double av = A(k, i);
            const double* brow = B.row(k);
            for (int j = 0; j < n; ++j) crow[j] += av * brow[j];
        }
    } else {
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int k = 0; k < k_dim; ++k) acc += A(k, i) * B(j, k);
            crow[j] += acc;
        }
    }
}

inline void softmax_row(Matrix& m, int r) {
    double* row = m.row(r);
    const int n = m.cols;
    double mx = row[0];
    for (int j = 1; j < n; ++j) mx = std::max(mx, row[j]);
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
        row[j] = std::exp(row[j] - mx);
        sum += row[j];
    }
    const double inv = 1.0 / sum;
    for (int j = 0; j < n; ++j) row[j] *= inv;
}

}  // namespace

Mode mode() { return g_mode; }
void set_mode(Mode m) { g_mode = m; }

void matmul_serial(const Matrix& A, bool ta, const Matrix& B, bool tb, Matrix& C, bool accumulate) {
    check_matmul_shapes(A, ta, B, tb, C);
    for (int i = 0; i < C.rows; ++i) matmul_row(A, ta, B, tb, C, accumulate, i);
}

void matmul_parallel(const Matrix& A, bool ta, const Matrix& B, bool tb, Matrix& C, bool accumulate) {
    check_matmul_shapes(A, ta, B, tb, C);
    const int rows = C.rows;
#pragma omp parallel for schedule(static)
    for (int i = 0; i < rows; ++i) matmul_row(A, ta, B, tb, C, accumulate, i);
}

void matmul(const Matrix& A, bool ta, const Matrix& B, bool tb, Matrix& C, bool accumulate) {
    if (g_mode == Mode::Parallel) {
        matmul_parallel(A, ta, B, tb, C, accumulate);
    } else {
        matmul_serial(A, ta, B, tb, C, accumulate);
    }
}

void softmax_rows_serial(Matrix& m) {
    for (int r = 0; r < m.rows; ++r) softmax_row(m, r);
}

void softmax_rows_parallel(Matrix& m) {
    const int rows = m.rows;
#pragma omp parallel for schedule(static)
    for (int r = 0; r < rows; ++r) softmax_row(m, r);
}

void softmax_rows(Matrix& m) {
    if (g_mode == Mode::Parallel) {
        softmax_rows_parallel(m);
    } else {
        softmax_rows_serial(m);
    }
}

}  // namespace picomt::kernels
