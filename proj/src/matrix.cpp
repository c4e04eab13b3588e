#include "gradedlie/matrix.hpp"

#include "gradedlie/error.hpp"

#include <string>

namespace gradedlie {

namespace {

void require_same_dim(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim())
        throw Error(ErrorKind::DimensionMismatch,
                    "matrix dimensions " + std::to_string(a.dim()) + " and " +
                        std::to_string(b.dim()) + " differ");
}

} // namespace

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    if (i >= n || j >= n)
        throw Error(ErrorKind::IndexOutOfRange, "matrix unit index outside dimension");
    Matrix m(n);
    m(i, j) = Scalar(1);
    return m;
}

Matrix Matrix::from_entries(std::size_t n, std::span<const MatrixEntry> entries) {
    Matrix m(n);
    for (const auto& e : entries) {
        if (e.row >= n || e.col >= n)
            throw Error(ErrorKind::IndexOutOfRange, "entry index outside dimension");
        m(e.row, e.col) += e.value;
    }
    return m;
}

Matrix Matrix::from_flat(std::size_t n, std::vector<Scalar> flat) {
    if (flat.size() != n * n)
        throw Error(ErrorKind::DimensionMismatch, "flat vector has wrong length");
    Matrix m;
    m.n_ = n;
    m.data_ = std::move(flat);
    return m;
}

bool Matrix::is_zero() const noexcept {
    for (const auto& x : data_)
        if (!x.is_zero())
            return false;
    return true;
}

std::vector<MatrixEntry> Matrix::entries() const {
    std::vector<MatrixEntry> out;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (const auto& x = (*this)(i, j); !x.is_zero())
                out.push_back({i, j, x});
    return out;
}

Scalar Matrix::trace() const {
    Scalar t;
    for (std::size_t i = 0; i < n_; ++i)
        t += (*this)(i, i);
    return t;
}

Matrix Matrix::transpose() const {
    Matrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    out += b;
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    out -= b;
    return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    require_same_dim(*this, o);
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!o.data_[k].is_zero())
            data_[k] += o.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    require_same_dim(*this, o);
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!o.data_[k].is_zero())
            data_[k] -= o.data_[k];
    return *this;
}

Matrix Matrix::operator-() const {
    Matrix out(n_);
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!data_[k].is_zero())
            out.data_[k] = -data_[k];
    return out;
}

Matrix operator*(const Scalar& c, const Matrix& a) {
    Matrix out(a.n_);
    if (c.is_zero())
        return out;
    for (std::size_t k = 0; k < a.data_.size(); ++k)
        if (!a.data_[k].is_zero())
            out.data_[k] = c * a.data_[k];
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b);
    const std::size_t n = a.n_;
    Matrix out(n);
    // Basis elements here are mostly one or two matrix units; skip zeros on both sides.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Scalar& aik = a.data_[i * n + k];
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& bkj = b.data_[k * n + j];
                if (!bkj.is_zero())
                    out.data_[i * n + j] += aik * bkj;
            }
        }
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }

} // namespace gradedlie
