// Exact elimination: spans, ranks and nullspaces.

#pragma once

#include "gradedlie/matrix.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace gradedlie {

using Vector = std::vector<Scalar>;

/// Incrementally maintained reduced row echelon form.
///
/// Every stored row has a leading 1 at its pivot column and zeros in the pivot
/// columns of all other rows, so coordinates are read off at the pivots.
/// Pivots are chosen leftmost-first.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t width) : width_(width) {}

    std::size_t width() const noexcept { return width_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Adds v to the span; returns false (and changes nothing) when v is dependent.
    bool insert(Vector v);
    bool contains(const Vector& v) const;
    /// Coefficients of v on rows() in storage order, or nullopt outside the span.
    std::optional<Vector> coordinates(const Vector& v) const;
    /// v minus its projection onto the span along the pivot columns.
    Vector residual(Vector v) const;

    /// Rows in storage order.
    const std::vector<Vector>& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    /// Rows ordered by pivot column.
    std::vector<Vector> sorted_rows() const;

private:
    std::size_t width_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

/// Maximal linearly independent subset, chosen greedily in input order.
std::vector<Matrix> span_basis(std::span<const Matrix> vectors);
/// Reduced echelon basis of the span, ordered by leading entry position.
std::vector<Matrix> reduced_basis(std::span<const Matrix> vectors);
std::size_t rank(std::span<const Matrix> vectors);
bool same_span(std::span<const Matrix> a, std::span<const Matrix> b);

/// Basis of {x : rows . x = 0}, returned in reduced echelon form by leading entry.
std::vector<Vector> nullspace(const std::vector<Vector>& rows, std::size_t unknowns);

/// Position of a matrix unit, zero-based.
using UnitIndex = std::pair<std::size_t, std::size_t>;

/// Solves linear conditions on the entries of an n x n matrix.
///
/// The unknowns are the coefficients on `free_units` (all other entries are zero);
/// `condition` maps a matrix to the vector of values that must vanish and must be
/// linear. Returns the reduced echelon basis of the solution space.
std::vector<Matrix> matrix_nullspace(std::size_t n, std::span<const UnitIndex> free_units,
                                     const std::function<Vector(const Matrix&)>& condition);

} // namespace gradedlie
