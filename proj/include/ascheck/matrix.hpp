#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ascheck {

/// Dense column-major matrix of doubles. Column-major so that per-parameter
/// operations (scaling a column of samples, Householder updates) run over
/// contiguous memory and feed the vector kernels directly.
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[c * rows_ + r]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[c * rows_ + r]; }

    std::span<double> column(std::size_t c) {
        return std::span<double>(data_.data() + c * rows_, rows_);
    }
    std::span<const double> column(std::size_t c) const {
        return std::span<const double>(data_.data() + c * rows_, rows_);
    }

    std::vector<double> row(std::size_t r) const {
        std::vector<double> out(cols_);
        for (std::size_t c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
        return out;
    }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

}  // namespace ascheck
