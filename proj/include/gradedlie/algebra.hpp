// Graded matrices, brackets, transposes, traces, forms.

#pragma once

#include "gradedlie/grading.hpp"
#include "gradedlie/matrix.hpp"

#include <array>
#include <optional>
#include <span>

namespace gradedlie {

/// A square matrix together with the grading of its index set.
///
/// When `degree()` is set every nonzero entry (i,j) has entry degree equal to it.
/// The zero matrix may carry any degree.
class GradedMatrix {
public:
    GradedMatrix() = default;

    /// Non-homogeneous (or unknown-degree) element.
    GradedMatrix(Matrix mat, DegreePartition partition);
    /// Homogeneous element; throws Error(NotHomogeneous) if an entry has another degree.
    GradedMatrix(Matrix mat, DegreePartition partition, Degree degree);

    /// Infers the degree from the nonzero entries. Throws Error(NotHomogeneous) for
    /// mixed input and Error(InvalidParameter) for the zero matrix.
    static GradedMatrix homogeneous(Matrix mat, DegreePartition partition);

    const Matrix& mat() const noexcept { return mat_; }
    const DegreePartition& partition() const noexcept { return partition_; }
    const std::optional<Degree>& degree() const noexcept { return degree_; }
    std::size_t dim() const noexcept { return mat_.dim(); }
    bool is_homogeneous() const noexcept { return degree_.has_value(); }
    bool is_zero() const noexcept { return mat_.is_zero(); }

    /// Degree, or Error(NotHomogeneous).
    Degree require_degree() const;

    friend bool operator==(const GradedMatrix&, const GradedMatrix&) = default;

private:
    Matrix mat_;
    DegreePartition partition_;
    std::optional<Degree> degree_;
};

/// Degree of the nonzero entries, or nullopt if they are mixed or absent.
std::optional<Degree> homogeneous_degree(const Matrix& mat, const DegreePartition& partition);

/// Splits a matrix into its four degree components, indexed by Degree::index().
std::array<Matrix, 4> homogeneous_components(const Matrix& mat,
                                             const DegreePartition& partition);

/// xy - (-1)^{a.b} yx with degree a+b.
GradedMatrix graded_bracket(const GradedMatrix& x, const GradedMatrix& y, Convention conv);

enum class TransposeKind { GradedTranspose, GradedSupertranspose };

constexpr Convention convention_of(TransposeKind kind) noexcept {
    return kind == TransposeKind::GradedTranspose ? Convention::GradedLieAlgebra
                                                  : Convention::GradedLieSuperalgebra;
}
constexpr TransposeKind transpose_kind_of(Convention conv) noexcept {
    return conv == Convention::GradedLieAlgebra ? TransposeKind::GradedTranspose
                                                : TransposeKind::GradedSupertranspose;
}

/// Sign picked up by entry (i,j) when it moves to (j,i): (-1)^{(d_i+d_j).d_i}.
int transpose_sign(const DegreePartition& partition, TransposeKind kind, std::size_t i,
                   std::size_t j);

/// Entrywise graded (super)transpose; works on non-homogeneous input.
Matrix graded_transpose(const Matrix& x, const DegreePartition& partition, TransposeKind kind);
GradedMatrix graded_transpose(const GradedMatrix& x, TransposeKind kind);

/// Supertrace weight of an index: -1 for degrees (1,0) and (0,1), +1 otherwise.
int supertrace_weight(Degree d) noexcept;
Scalar graded_supertrace(const GradedMatrix& x);
Scalar graded_supertrace(const Matrix& x, const DegreePartition& partition);

/// [[x,[y,z]]] == [[[x,y],z]] + (-1)^{a.b} [[y,[x,z]]], exactly.
bool jacobi_check(const GradedMatrix& x, const GradedMatrix& y, const GradedMatrix& z,
                  Convention conv);

/// Bilinear-form condition X^T F + F X = 0 with a graded (super)transpose.
struct FormCondition {
    Matrix form;
    TransposeKind transpose_kind;
};

/// X^T F + F X.
Matrix form_residual(const Matrix& x, const DegreePartition& partition,
                     const FormCondition& cond);
bool form_membership(const GradedMatrix& x, const FormCondition& cond);

/// K for so_q(2n+1) in the block order q, n-q, q, n-q, 1.
Matrix so_q_form(int n, int q);
/// J for osp(2m1+1,2m2|2n1,2n2) in the order (m | m | 1 | n | n).
Matrix osp_form(int m1, int m2, int n1, int n2);

} // namespace gradedlie
