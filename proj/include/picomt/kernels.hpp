#pragma once

#include <cstdint>

#include "picomt/tensor.hpp"

namespace picomt::kernels {

// The hot inner loops exist in two variants: a plain serial reference and
// an OpenMP one. Both compute every output element with the same operand
// order, so results are bit-identical regardless of variant or thread
// count; the serial build is the reference the parallel one is tested
// against. Select with set_mode() or the PICOMT_KERNELS env var
// ("serial" / "parallel"); default is parallel when compiled with OpenMP.
enum class Mode { Serial, Parallel };

Mode mode();
void set_mode(Mode m);

// C [+]= op(A) * op(B) where op is optional transposition.
void matmul(const Matrix& A, bool trans_a, const Matrix& B, bool trans_b, Matrix& C, bool accumulate);

void matmul_serial(const Matrix& A, bool trans_a, const Matrix& B, bool trans_b, Matrix& C, bool accumulate);
void matmul_parallel(const Matrix& A, bool trans_a, const Matrix& B, bool trans_b, Matrix& C, bool accumulate);

// In-place row-wise softmax. Per-row work is independent.
void softmax_rows(Matrix& m);
void softmax_rows_serial(Matrix& m);
void softmax_rows_parallel(Matrix& m);

// Deterministic parallel loop over [0, n): iterations must not share
// mutable state. Falls back to a serial loop in Serial mode.
template <typename F>
void parallel_for(int n, F&& f) {
    if (mode() == Mode::Parallel) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) f(i);
    } else {
        for (int i = 0; i < n; ++i) f(i);
    }
}

}  // namespace picomt::kernels
