#pragma once

#include "gradedlie/scalar.hpp"

#include <cstddef>
#include <span>
#include <tuple>
#include <vector>

namespace gradedlie {

/// Nonzero entry (row, col, value), zero-based.
struct MatrixEntry {
    std::size_t row;
    std::size_t col;
    Scalar value;

    friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}

    static Matrix zero(std::size_t n) { return Matrix(n); }
    static Matrix identity(std::size_t n);
    /// Matrix unit e_{ij}, zero-based.
    static Matrix unit(std::size_t n, std::size_t i, std::size_t j);
    static Matrix from_entries(std::size_t n, std::span<const MatrixEntry> entries);

    std::size_t dim() const noexcept { return n_; }

    const Scalar& operator()(std::size_t i, std::size_t j) const noexcept {
        return data_[i * n_ + j];
    }
    Scalar& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }

    /// Row-major entries; used as the coordinate vector in elimination.
    std::span<const Scalar> flat() const noexcept { return data_; }
    static Matrix from_flat(std::size_t n, std::vector<Scalar> flat);

    bool is_zero() const noexcept;
    /// Nonzero entries in row-major order.
    std::vector<MatrixEntry> entries() const;
    Scalar trace() const;
    Matrix transpose() const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& c, const Matrix& a);
    Matrix operator-() const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Scalar> data_;
};

/// Exact product; throws Error(DimensionMismatch).
Matrix mat_mul(const Matrix& a, const Matrix& b);

} // namespace gradedlie
