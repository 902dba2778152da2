#pragma once

#include <cassert>
#include <cstddef>
#include <string>
#include <vector>

#include "picomt/rng.hpp"

namespace picomt {

// Dense row-major matrix of doubles. All model math runs in double
// precision; desk-scale models are small enough that this is cheap and it
// makes gradient checks and bit-level reproducibility uncomplicated.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0.0) {}

    double& operator()(int r, int c) {
        assert(r >= 0 && r < rows && c >= 0 && c < cols);
        return a[static_cast<std::size_t>(r) * cols + c];
    }
    double operator()(int r, int c) const {
        assert(r >= 0 && r < rows && c >= 0 && c < cols);
        return a[static_cast<std::size_t>(r) * cols + c];
    }

    double* row(int r) { return a.data() + static_cast<std::size_t>(r) * cols; }
    const double* row(int r) const { return a.data() + static_cast<std::size_t>(r) * cols; }

    std::size_t size() const { return a.size(); }
    bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }

    void set_zero() { std::fill(a.begin(), a.end(), 0.0); }

    void fill_uniform(RngStream& rng, double lo, double hi) {
        for (double& x : a) x = rng.next_uniform(lo, hi);
    }

    std::string shape_str() const { return std::to_string(rows) + "x" + std::to_string(cols); }
};

inline void add_into(Matrix& dst, const Matrix& src) {
    assert(dst.same_shape(src));
    for (std::size_t i = 0; i < dst.a.size(); ++i) dst.a[i] += src.a[i];
}

inline void scale_inplace(Matrix& m, double s) {
    for (double& x : m.a) x *= s;
}

}  // namespace picomt
